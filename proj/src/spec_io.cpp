#include "ks/spec_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ks {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

double number(const json& j, const std::string& where) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        try {
            return parse_real(j.get<std::string>());
        } catch (const ParseError& e) {
            fail(where, e.what());
        }
    }
    fail(where, "expected a number or decimal string");
}

const json& array(const json& j, std::size_t size, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    if (size != 0 && j.size() != size)
        fail(where, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
    return j;
}

Polynomial polynomial(const json& j, const std::string& where) {
    array(j, 0, where);
    std::vector<double> c;
    c.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) c.push_back(number(j[k], where + "[" + std::to_string(k) + "]"));
    return Polynomial(std::move(c));
}

Piece piece_coeffs(const json& j, const Codomain& cd, const std::string& where) {
    array(j, cd.dim, where);
    Piece p;
    p.reserve(cd.components());
    for (std::size_t i = 0; i < cd.dim; ++i) {
        const std::string wi = where + "[" + std::to_string(i) + "]";
        if (cd.kind == Kind::vector) {
            p.push_back(polynomial(j[i], wi));
        } else {
            array(j[i], cd.dim, wi);
            for (std::size_t c = 0; c < cd.dim; ++c) p.push_back(polynomial(j[i][c], wi + "[" + std::to_string(c) + "]"));
        }
    }
    return p;
}

Element element(const json& j, const Codomain& cd, const std::string& where) {
    array(j, cd.dim, where);
    std::vector<double> data;
    data.reserve(cd.components());
    for (std::size_t i = 0; i < cd.dim; ++i) {
        const std::string wi = where + "[" + std::to_string(i) + "]";
        if (cd.kind == Kind::vector) {
            data.push_back(number(j[i], wi));
        } else {
            array(j[i], cd.dim, wi);
            for (std::size_t c = 0; c < cd.dim; ++c) data.push_back(number(j[i][c], wi + "[" + std::to_string(c) + "]"));
        }
    }
    return Element(cd, std::move(data));
}

Element piece_at(const Piece& p, const Codomain& cd, double t) {
    std::vector<double> data;
    data.reserve(p.size());
    for (const Polynomial& q : p) data.push_back(q(t));
    return Element(cd, std::move(data));
}

ordered_json real_json(double x) { return format_real(x); }

ordered_json element_json(const Element& e) {
    const Codomain& cd = e.codomain();
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < cd.dim; ++i) {
        if (cd.kind == Kind::vector) {
            out.push_back(real_json(e[i]));
        } else {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < cd.dim; ++c) row.push_back(real_json(e[i * cd.dim + c]));
            out.push_back(std::move(row));
        }
    }
    return out;
}

ordered_json poly_json(const Polynomial& p) {
    ordered_json out = ordered_json::array();
    if (p.is_zero()) out.push_back(real_json(0.0));
    for (double c : p.coeffs()) out.push_back(real_json(c));
    return out;
}

}  // namespace

double parse_real(std::string_view text) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (begin != end && *begin == '+') ++begin;
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, x);
    if (ec != std::errc() || ptr != end || !std::isfinite(x))
        throw ParseError("invalid number '" + std::string(text) + "'");
    return x;
}

PiecewiseFunction parse_function_spec(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError("spec is not valid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }

    const json& domain = array(member(doc, "domain", "spec"), 2, "domain");
    const double a = number(domain[0], "domain[0]");
    const double b = number(domain[1], "domain[1]");
    if (!(a < b)) fail("domain", "expected a < b");

    const json& cdj = member(doc, "codomain", "spec");
    const json& kind = member(cdj, "kind", "codomain");
    const json& dim = member(cdj, "dim", "codomain");
    Codomain cd;
    if (kind == "vector")
        cd.kind = Kind::vector;
    else if (kind == "operator")
        cd.kind = Kind::op;
    else
        fail("codomain.kind", "expected \"vector\" or \"operator\"");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() < 1) fail("codomain.dim", "expected a positive integer");
    cd.dim = dim.get<std::size_t>();

    std::size_t max_degree = kDefaultMaxDegree;
    if (doc.contains("max_degree")) {
        const json& md = doc["max_degree"];
        if (!md.is_number_unsigned()) fail("max_degree", "expected a non-negative integer");
        max_degree = md.get<std::size_t>();
    }

    const json& pieces = array(member(doc, "pieces", "spec"), 0, "pieces");
    if (pieces.empty()) fail("pieces", "expected at least one piece");
    std::vector<double> grid{a};
    std::vector<Piece> ps;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const std::string where = "pieces[" + std::to_string(k) + "]";
        const json& iv = array(member(pieces[k], "interval", where), 2, where + ".interval");
        const double lo = number(iv[0], where + ".interval[0]");
        const double hi = number(iv[1], where + ".interval[1]");
        if (lo != grid.back()) fail(where, "interval does not start where the previous one ends");
        if (!(lo < hi)) fail(where, "interval must have lo < hi");
        grid.push_back(hi);
        ps.push_back(piece_coeffs(member(pieces[k], "coeffs", where), cd, where + ".coeffs"));
    }
    if (grid.back() != b) fail("pieces", "pieces do not cover the domain");

    std::map<std::size_t, Element> given;
    if (doc.contains("nodes")) {
        const json& nodes = array(doc["nodes"], 0, "nodes");
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            const std::string where = "nodes[" + std::to_string(k) + "]";
            const double t = number(member(nodes[k], "t", where), where + ".t");
            auto it = std::lower_bound(grid.begin(), grid.end(), t);
            if (it == grid.end() || *it != t) fail(where, "t = " + format_real(t) + " is not a grid point");
            const auto idx = static_cast<std::size_t>(it - grid.begin());
            if (given.count(idx)) fail(where, "duplicate node at t = " + format_real(t));
            given.emplace(idx, element(member(nodes[k], "value", where), cd, where + ".value"));
        }
    }

    std::vector<Element> node_values;
    node_values.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (auto it = given.find(k); it != given.end()) {
            node_values.push_back(it->second);
            continue;
        }
        const double t = grid[k];
        if (k == 0) {
            node_values.push_back(piece_at(ps.front(), cd, t));
        } else if (k + 1 == grid.size()) {
            node_values.push_back(piece_at(ps.back(), cd, t));
        } else {
            Element left = piece_at(ps[k - 1], cd, t);
            Element right = piece_at(ps[k], cd, t);
            if (!(left == right))
                fail("nodes", "no node at t = " + format_real(t) + " and the adjacent pieces disagree there");
            node_values.push_back(std::move(left));
        }
    }

    try {
        return PiecewiseFunction(cd, std::move(grid), std::move(ps), std::move(node_values), max_degree);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("spec: ") + e.what());
    } catch (const std::domain_error& e) {
        throw ParseError(std::string("spec: ") + e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PiecewiseFunction load_function_spec(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    try {
        return parse_function_spec(text);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string serialize_function_spec(const PiecewiseFunction& f) {
    const Codomain& cd = f.codomain();
    ordered_json doc;
    doc["domain"] = {real_json(f.a()), real_json(f.b())};
    doc["codomain"] = {{"kind", cd.kind == Kind::vector ? "vector" : "operator"}, {"dim", cd.dim}};
    if (f.max_degree() != kDefaultMaxDegree) doc["max_degree"] = f.max_degree();
    ordered_json pieces = ordered_json::array();
    for (std::size_t k = 0; k < f.piece_count(); ++k) {
        const Piece& p = f.pieces()[k];
        ordered_json coeffs = ordered_json::array();
        for (std::size_t i = 0; i < cd.dim; ++i) {
            if (cd.kind == Kind::vector) {
                coeffs.push_back(poly_json(p[i]));
            } else {
                ordered_json row = ordered_json::array();
                for (std::size_t c = 0; c < cd.dim; ++c) row.push_back(poly_json(p[i * cd.dim + c]));
                coeffs.push_back(std::move(row));
            }
        }
        pieces.push_back({{"interval", {real_json(f.grid()[k]), real_json(f.grid()[k + 1])}}, {"coeffs", coeffs}});
    }
    doc["pieces"] = std::move(pieces);
    ordered_json nodes = ordered_json::array();
    for (std::size_t k = 0; k < f.grid().size(); ++k)
        nodes.push_back({{"t", real_json(f.grid()[k])}, {"value", element_json(f.node_values()[k])}});
    doc["nodes"] = std::move(nodes);
    return doc.dump(2) + "\n";
}

void save_function_spec(const PiecewiseFunction& f, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    out << serialize_function_spec(f);
}

// ---------------------------------------------------------------------------
// Set grammar

namespace {

class SetParser {
public:
    explicit SetParser(std::string_view s) : s_(s) {}

    ElementarySet parse() {
        std::vector<Interval> parts;
        skip_ws();
        if (pos_ == s_.size()) return {};
        for (;;) {
            parts.push_back(interval());
            skip_ws();
            if (pos_ == s_.size()) break;
            expect(',');
        }
        return ElementarySet(std::span<const Interval>(parts));
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        throw ParseError("set expression, position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size()) error(std::string("expected '") + c + "', found end of input");
        if (s_[pos_] != c) error(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
        ++pos_;
    }

    double real() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                    s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        if (start == pos_) error("expected a number");
        const std::string_view token = s_.substr(start, pos_ - start);
        try {
            return parse_real(token);
        } catch (const ParseError&) {
            pos_ = start;
            error("invalid number '" + std::string(token) + "'");
        }
    }

    Interval interval() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ >= s_.size()) error("expected '[' or '(', found end of input");
        const char open = s_[pos_];
        if (open != '[' && open != '(') error(std::string("expected '[' or '(', found '") + open + "'");
        ++pos_;
        const double lo = real();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ']' && open == '[') {
            ++pos_;
            return Interval::point(lo);
        }
        expect(',');
        const double hi = real();
        skip_ws();
        if (pos_ >= s_.size()) error("expected ']' or ')', found end of input");
        const char close = s_[pos_];
        if (close != ']' && close != ')') error(std::string("expected ']' or ')', found '") + close + "'");
        ++pos_;
        try {
            return Interval(lo, hi, open == '[', close == ']');
        } catch (const std::exception& e) {
            pos_ = start;
            error(e.what());
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ElementarySet parse_set(std::string_view text) { return SetParser(text).parse(); }

}  // namespace ks
