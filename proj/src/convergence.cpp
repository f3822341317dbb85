#include "ks/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

#include "ks/integrate.hpp"
#include "ks/kernels.hpp"

namespace ks {

namespace {

Element ones(std::size_t dim, double scale) { return Value(dim, scale); }

// Errors below this (relative to K) count as exact agreement in the pointwise check.
constexpr double kPointwiseTol = 1e-12;

void check_pointwise(const SequenceFamily& family, std::span<const PiecewiseFunction> gs,
                     std::span<const std::size_t> ns, std::span<const double> grid) {
    const double tol = kPointwiseTol * std::max(1.0, family.bound);
    double first_total = 0.0;
    double last_total = 0.0;
    double last_max = 0.0;
    for (double t : grid) {
        const Element target = family.limit.eval(t);
        double prev = INFINITY;
        bool monotone = true;
        double last = 0.0;
        for (std::size_t k = 0; k < gs.size(); ++k) {
            last = (gs[k].eval(t) - target).norm();
            if (k == 0) first_total += last;
            if (last > prev) monotone = false;
            prev = last;
        }
        last_total += last;
        last_max = std::max(last_max, last);
        if (!monotone && last > tol)
            throw HypothesisViolation("pointwise convergence check fails at t = " + format_real(t) +
                                      " (error " + format_real(last) + " at n = " + std::to_string(ns.back()) + ")");
    }
    // Over the whole grid the errors must shrink from the first n to the last.
    if (gs.size() >= 2 && last_max > tol && !(last_total < first_total))
        throw HypothesisViolation("pointwise convergence check fails: mean sample error does not decrease from n = " +
                                  std::to_string(ns.front()) + " to n = " + std::to_string(ns.back()));
}

}  // namespace

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::power: return "power";
        case FamilyKind::spike: return "spike";
        case FamilyKind::truncation: return "truncation";
        case FamilyKind::custom_list: return "custom-list";
    }
    return "?";
}

FamilyKind family_kind_from_string(const std::string& name) {
    if (name == "power") return FamilyKind::power;
    if (name == "spike") return FamilyKind::spike;
    if (name == "truncation") return FamilyKind::truncation;
    if (name == "custom-list") return FamilyKind::custom_list;
    throw ArgumentError("unknown family '" + name + "'");
}

SequenceFamily SequenceFamily::power(std::size_t dim) {
    PiecewiseFunction limit = PiecewiseFunction::indicator(0.0, 1.0, {Interval::point(1.0)}, ones(dim, 1.0));
    return {FamilyKind::power, std::move(limit), 1.0};
}

SequenceFamily SequenceFamily::spike(double a, double b, double c, double height, std::size_t dim) {
    if (!(a <= c && c <= b)) throw DomainError("spike center " + format_real(c) + " outside the domain");
    PiecewiseFunction limit = PiecewiseFunction::indicator(a, b, {Interval::point(c)}, ones(dim, height));
    SequenceFamily f{FamilyKind::spike, std::move(limit), std::abs(height)};
    f.center = c;
    f.height = height;
    return f;
}

SequenceFamily SequenceFamily::truncation(PiecewiseFunction f_b, std::vector<double> order, double bound) {
    SequenceFamily f{FamilyKind::truncation, std::move(f_b), bound};
    f.order = std::move(order);
    return f;
}

SequenceFamily SequenceFamily::truncation(PiecewiseFunction f_b, std::vector<double> order) {
    SequenceFamily f = truncation(std::move(f_b), std::move(order), 0.0);
    for (std::size_t n = 1; n <= std::max<std::size_t>(f.order.size(), 1); ++n)
        f.bound = std::max(f.bound, sup_norm(realize(f, n)));
    return f;
}

SequenceFamily SequenceFamily::custom(std::vector<PiecewiseFunction> members, PiecewiseFunction limit, double bound) {
    SequenceFamily f{FamilyKind::custom_list, std::move(limit), bound};
    f.members = std::move(members);
    return f;
}

PiecewiseFunction realize(const SequenceFamily& family, std::size_t n) {
    if (n < 1) throw ArgumentError("sequence index must be >= 1");
    const PiecewiseFunction& g = family.limit;
    const std::size_t dim = g.codomain().dim;
    switch (family.kind) {
        case FamilyKind::power: {
            Piece piece(dim, Polynomial::monomial(n));
            return PiecewiseFunction::from_piece(g.codomain(), 0.0, 1.0, std::move(piece),
                                                 std::max(n, kDefaultMaxDegree));
        }
        case FamilyKind::spike: {
            const double hi = std::min(family.center + 1.0 / static_cast<double>(n), g.b());
            ElementarySet e{Interval::closed(family.center, hi)};
            return PiecewiseFunction::indicator(g.a(), g.b(), e, ones(dim, family.height));
        }
        case FamilyKind::truncation: {
            const std::size_t keep = std::min(n, family.order.size());
            return break_truncate(g, std::span<const double>(family.order.data(), keep));
        }
        case FamilyKind::custom_list:
            if (n > family.members.size())
                throw ArgumentError("custom family has only " + std::to_string(family.members.size()) + " members");
            return family.members[n - 1];
    }
    throw ArgumentError("unknown family kind");
}

std::vector<double> sample_grid(double a, double b, std::span<const double> extra) {
    std::vector<double> pts{a, b};
    for (double t : extra)
        if (a <= t && t <= b) pts.push_back(t);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t fixed = pts.size();
    const std::size_t m = kSampleGridSize > fixed ? kSampleGridSize - fixed : 0;
    for (std::size_t k = 0; k < m; ++k) {
        const double x = std::cos(std::numbers::pi * (2.0 * static_cast<double>(k) + 1.0) / (2.0 * static_cast<double>(m)));
        pts.push_back(a + 0.5 * (b - a) * (1.0 - x));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

ConvergenceReport run_bounded_convergence(const PiecewiseFunction& F, const SequenceFamily& family,
                                          std::span<const std::size_t> ns_in, double threshold,
                                          const ConvergenceOptions& options) {
    if (ns_in.empty()) throw ArgumentError("ns must not be empty");
    if (!(threshold > 0.0)) throw ArgumentError("threshold must be positive");
    std::vector<std::size_t> ns(ns_in.begin(), ns_in.end());
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    if (ns.front() < 1) throw ArgumentError("sequence index must be >= 1");
    kernels::check_pair(F, family.limit);

    // Hypotheses first: every g_n is realized and checked before any integral.
    std::vector<PiecewiseFunction> gs;
    gs.reserve(ns.size());
    std::vector<double> jump_points;
    for (const JumpRecord& r : jumps(family.limit)) jump_points.push_back(r.t);
    for (std::size_t n : ns) {
        PiecewiseFunction g = realize(family, n);
        kernels::check_pair(F, g);
        const double sup = sup_norm(g);
        if (sup > family.bound)
            throw HypothesisViolation("uniform bound violated: ||g_" + std::to_string(n) + "|| = " + format_real(sup) +
                                      " > K = " + format_real(family.bound));
        for (const JumpRecord& r : jumps(g)) jump_points.push_back(r.t);
        gs.push_back(std::move(g));
    }
    const std::vector<double> grid = sample_grid(F.a(), F.b(), jump_points);
    check_pointwise(family, gs, ns, grid);

    ConvergenceReport report;
    report.threshold = threshold;
    report.sample_points = grid.size();
    report.entries.resize(ns.size());
    std::vector<std::exception_ptr> errors(ns.size() + 1);
    std::vector<Value> values(ns.size() + 1);

    const auto notify = [&](std::size_t n) {
        if (options.on_integral) {
#pragma omp critical(ks_convergence_observer)
            options.on_integral(n);
        }
    };

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ns.size() + 1); ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            if (k == ns.size()) {
                notify(0);
                values[k] = ks_dFg(F, family.limit).value;
            } else {
                notify(ns[k]);
                values[k] = ks_dFg(F, gs[k]).value;
            }
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    report.integral_limit = values.back();
    for (std::size_t k = 0; k < ns.size(); ++k)
        report.entries[k] = {ns[k], values[k], (values[k] - report.integral_limit).norm()};
    report.passed = report.entries.back().error < threshold;
    return report;
}

BreakLimit verify_break_limit(const PiecewiseFunction& F, const PiecewiseFunction& g) {
    kernels::check_pair(F, g);
    BreakLimit r{ks_dFg(jordan_decompose(F).breaks, g).value, Value(g.codomain().dim)};
    for (const JumpRecord& j : jumps(F)) r.sum_value += j.jump_full.as_operator() * g.eval(j.t).as_value();
    return r;
}

}  // namespace ks
