// kscli: command-line front end for the Kurzweil-Stieltjes library.
//
// Exit codes: 0 success, 2 parse error, 3 domain or dimension error,
// 4 hypothesis violation, 5 oracle failure, 1 anything else.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ks/convergence.hpp"
#include "ks/funcspace.hpp"
#include "ks/gauge.hpp"
#include "ks/integrate.hpp"
#include "ks/spec_io.hpp"
#include "ks/report.hpp"
#include "ks/variation.hpp"

namespace {

using namespace ks;

enum Exit { kOk = 0, kOther = 1, kParse = 2, kDomain = 3, kHypothesis = 4, kOracle = 5 };

struct Options {
    std::string spec_f;
    std::string spec_g;
    std::optional<std::string> set;
    std::string orientation = "dFg";
    double tol = 1e-8;
    std::size_t max_items = OracleOptions{}.max_items;
    std::string ns = "1,2,4,8,16,32,64,128,256,512,1024";
    double threshold = 1e-6;
    std::string out;
    std::string family = "power";
    std::optional<double> center;
    double height = 1.0;
    std::optional<double> bound;
    std::string break_spec;
    std::string order;
    bool timing = false;
};

struct Loaded {
    PiecewiseFunction f;
    std::string text;
};

Loaded load(const std::string& path) {
    std::string text = read_text_file(path);
    try {
        return {parse_function_spec(text), std::move(text)};
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Orientation orientation_of(const std::string& s) {
    if (s == "dFg") return Orientation::dFg;
    if (s == "Fdg") return Orientation::Fdg;
    throw ParseError("--orientation must be dFg or Fdg, got '" + s + "'");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::size_t> parse_ns(const std::string& s) {
    std::vector<std::size_t> ns;
    for (const std::string& tok : split_commas(s)) {
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || n < 1)
            throw ParseError("--ns: '" + tok + "' is not a positive integer");
        ns.push_back(n);
    }
    return ns;
}

std::vector<double> parse_reals(const std::string& s, const std::string& flag) {
    std::vector<double> out;
    if (s.empty()) return out;
    for (const std::string& tok : split_commas(s)) {
        try {
            out.push_back(parse_real(tok));
        } catch (const ParseError& e) {
            throw ParseError(flag + ": " + e.what());
        }
    }
    return out;
}

void add_split(Report& r, const Value& value, const Value& cont, const Value& jump) {
    r.add("value", value);
    r.add("continuous", cont);
    r.add("jump", jump);
}

ElementarySet set_or_domain(const Options& o, const PiecewiseFunction& f, Report& r) {
    const std::string expr =
        o.set ? *o.set : "[" + format_real(f.a()) + "," + format_real(f.b()) + "]";
    r.digest(expr);
    ElementarySet e = parse_set(expr);
    r.add("set", e.empty() ? std::string("{}") : e.to_string());
    return e;
}

Report cmd_integrate(const Options& o) {
    Report r("integrate");
    const Loaded F = load(o.spec_f);
    const Loaded g = load(o.spec_g);
    r.digest(F.text);
    r.digest(g.text);
    r.digest(o.orientation);
    const Orientation orient = orientation_of(o.orientation);
    r.add("orientation", o.orientation);
    const ElementarySet e = set_or_domain(o, F.f, r);
    const IntegralResult res =
        orient == Orientation::dFg ? integral_over_elementary(F.f, g.f, e) : integral_over_elementary_Fdg(F.f, g.f, e);
    add_split(r, res.value, res.continuous_contribution, res.jump_contribution);
    return r;
}

Report cmd_variation(const Options& o) {
    Report r("variation");
    const Loaded f = load(o.spec_f);
    r.digest(f.text);
    const ElementarySet e = set_or_domain(o, f.f, r);
    const VariationResult v = var_elementary(f.f, e);
    r.add("total", v.total);
    r.add("continuous", v.continuous_contribution);
    r.add("jump", v.jump_contribution);
    return r;
}

Report cmd_decompose(const Options& o) {
    Report r("decompose");
    const Loaded f = load(o.spec_f);
    r.digest(f.text);
    const JordanDecomposition d = jordan_decompose(f.f);
    const std::vector<JumpRecord> js = jumps(f.f);
    r.add_count("jump_count", js.size());
    std::vector<double> pts;
    for (const JumpRecord& j : js) pts.push_back(j.t);
    r.add("jump_points", Value(pts));
    if (!o.out.empty()) {
        const std::string cont = o.out + ".continuous.json";
        const std::string brk = o.out + ".break.json";
        save_function_spec(d.continuous, cont);
        save_function_spec(d.breaks, brk);
        r.add("continuous_file", cont);
        r.add("break_file", brk);
    }
    r.block()["continuous_spec"] = nlohmann::ordered_json::parse(serialize_function_spec(d.continuous));
    r.block()["break_spec"] = nlohmann::ordered_json::parse(serialize_function_spec(d.breaks));
    return r;
}

SequenceFamily build_family(const Options& o, const PiecewiseFunction& F) {
    const std::size_t dim = F.codomain().dim;
    std::optional<SequenceFamily> fam;
    switch (family_kind_from_string(o.family)) {
        case FamilyKind::power:
            if (F.a() != 0.0 || F.b() != 1.0) throw DomainError("the power family lives on [0,1]");
            fam = SequenceFamily::power(dim);
            break;
        case FamilyKind::spike:
            fam = SequenceFamily::spike(F.a(), F.b(), o.center.value_or(F.a()), o.height, dim);
            break;
        case FamilyKind::truncation: {
            if (o.break_spec.empty()) throw ParseError("--family truncation needs --break-spec");
            PiecewiseFunction fb = load(o.break_spec).f;
            std::vector<double> order = parse_reals(o.order, "--order");
            if (order.empty())
                for (const JumpRecord& j : jumps(fb)) order.push_back(j.t);
            fam = SequenceFamily::truncation(std::move(fb), std::move(order));
            break;
        }
        case FamilyKind::custom_list:
            throw ParseError("custom-list families are library-only");
    }
    if (o.bound) fam->bound = *o.bound;
    return std::move(*fam);
}

Report cmd_converge(const Options& o) {
    Report r("converge");
    const Loaded F = load(o.spec_f);
    r.digest(F.text);
    r.digest(o.family);
    r.digest(o.ns);
    r.digest(format_real(o.threshold));
    if (o.center) r.digest(format_real(*o.center));
    r.digest(format_real(o.height));
    if (o.bound) r.digest(format_real(*o.bound));
    if (!o.break_spec.empty()) r.digest(read_text_file(o.break_spec));
    r.digest(o.order);
    if (!(o.threshold > 0.0)) throw ParseError("--threshold must be positive");
    const std::vector<std::size_t> ns = parse_ns(o.ns);
    const SequenceFamily fam = build_family(o, F.f);
    const ConvergenceReport rep = run_bounded_convergence(F.f, fam, ns, o.threshold);

    r.add("family", to_string(fam.kind));
    r.add("bound", fam.bound);
    r.add("threshold", rep.threshold);
    r.add_count("sample_points", rep.sample_points);
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const ConvergenceEntry& e : rep.entries) {
        const std::string n = std::to_string(e.n);
        r.add("integral." + n, e.integral);
        r.add("error." + n, e.error);
        nlohmann::ordered_json je;
        je["n"] = e.n;
        je["integral"] = value_to_string(e.integral);
        je["error"] = format_real(e.error);
        entries.push_back(std::move(je));
    }
    r.add("integral_limit", rep.integral_limit);
    r.add("final_error", rep.entries.back().error);
    r.add("passed", rep.passed);
    r.block()["entries"] = std::move(entries);
    return r;
}

Report cmd_oracle(const Options& o) {
    Report r("oracle");
    const Loaded F = load(o.spec_f);
    const Loaded g = load(o.spec_g);
    r.digest(F.text);
    r.digest(g.text);
    r.digest(o.orientation);
    r.digest(format_real(o.tol));
    r.digest(std::to_string(o.max_items));
    const Orientation orient = orientation_of(o.orientation);
    if (!(o.tol > 0.0)) throw ParseError("--tol must be positive");
    const OracleResult res = oracle_integral(F.f, g.f, orient, {.tol = o.tol, .max_items = o.max_items});
    r.add("orientation", o.orientation);
    r.add("tol", o.tol);
    r.add("value", res.value);
    r.add_count("level", static_cast<std::size_t>(res.level));
    r.add_count("items", res.items);
    return r;
}

int fail(Exit code, const char* kind, const std::string& msg) {
    std::cerr << "error: " << kind << ": " << msg << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kurzweil-Stieltjes integration toolkit"};
    app.require_subcommand(1);
    Options o;

    auto with_set = [&](CLI::App* sub) {
        sub->add_option("--set", o.set, "elementary set, e.g. \"[0,0.25],(0.5,0.75)\"; default: the domain");
    };
    auto with_timing = [&](CLI::App* sub) { sub->add_flag("--timing", o.timing, "append elapsed_ms"); };

    CLI::App* integ = app.add_subcommand("integrate", "integral over an elementary set");
    integ->add_option("F", o.spec_f, "integrator spec (operator-valued)")->required();
    integ->add_option("g", o.spec_g, "integrand spec (vector-valued)")->required();
    with_set(integ);
    integ->add_option("--orientation", o.orientation, "dFg or Fdg");
    with_timing(integ);

    CLI::App* var = app.add_subcommand("variation", "variation over an elementary set");
    var->add_option("f", o.spec_f, "function spec")->required();
    with_set(var);
    with_timing(var);

    CLI::App* dec = app.add_subcommand("decompose", "Jordan decomposition into continuous and break parts");
    dec->add_option("f", o.spec_f, "function spec")->required();
    dec->add_option("--out", o.out, "write PREFIX.continuous.json and PREFIX.break.json");
    with_timing(dec);

    CLI::App* conv = app.add_subcommand("converge", "bounded convergence experiment");
    conv->add_option("F", o.spec_f, "integrator spec (operator-valued)")->required();
    conv->add_option("--family", o.family, "power | spike | truncation");
    conv->add_option("--ns", o.ns, "comma-separated sequence indices");
    conv->add_option("--threshold", o.threshold, "pass threshold for the final error");
    conv->add_option("--center", o.center, "spike center (default: left end of the domain)");
    conv->add_option("--height", o.height, "spike height");
    conv->add_option("--bound", o.bound, "declared uniform bound K (overrides the family default)");
    conv->add_option("--break-spec", o.break_spec, "break function for the truncation family");
    conv->add_option("--order", o.order, "comma-separated jump points in keep order (truncation)");
    with_timing(conv);

    CLI::App* orc = app.add_subcommand("oracle", "gauge-refinement estimate of the integral");
    orc->add_option("F", o.spec_f, "integrator spec (operator-valued)")->required();
    orc->add_option("g", o.spec_g, "integrand spec (vector-valued)")->required();
    orc->add_option("--orientation", o.orientation, "dFg or Fdg");
    orc->add_option("--tol", o.tol, "stopping tolerance");
    orc->add_option("--max-items", o.max_items, "give up before a level needs more division items than this");
    with_timing(orc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Report r = integ->parsed()  ? cmd_integrate(o)
                   : var->parsed()  ? cmd_variation(o)
                   : dec->parsed()  ? cmd_decompose(o)
                   : conv->parsed() ? cmd_converge(o)
                                    : cmd_oracle(o);
        if (o.timing) {
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            r.add("elapsed_ms", ms);
        }
        std::cout << r.render();
        return kOk;
    } catch (const ParseError& e) {
        return fail(kParse, "parse", e.what());
    } catch (const HypothesisViolation& e) {
        return fail(kHypothesis, "hypothesis-violation", e.what());
    } catch (const OracleFailure& e) {
        return fail(kOracle, "oracle-failure", e.what());
    } catch (const GaugeTooSmall& e) {
        return fail(kOracle, "oracle-failure", e.what());
    } catch (const DomainError& e) {
        return fail(kDomain, "domain", e.what());
    } catch (const ArgumentError& e) {
        return fail(kDomain, "argument", e.what());
    } catch (const std::exception& e) {
        return fail(kOther, "internal", e.what());
    }
}
