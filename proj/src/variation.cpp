#include "ks/variation.hpp"

#include <algorithm>

namespace ks {

namespace {

// integral over [lo, hi] of ||P'(t)|| for piece k, lo/hi inside the piece.
double piece_arc(const PiecewiseFunction& f, std::size_t k, double lo, double hi) {
    Piece d;
    d.reserve(f.pieces()[k].size());
    for (const Polynomial& p : f.pieces()[k]) d.push_back(p.derivative());
    double s = 0.0;
    for (const EnvelopeSegment& seg : norm_envelope(f.codomain(), d, lo, hi)) s += seg.norm.integral(seg.lo, seg.hi);
    return s;
}

double continuous_part(const PiecewiseFunction& f, double c, double d) {
    double s = 0.0;
    const auto& grid = f.grid();
    for (std::size_t k = 0; k < f.piece_count(); ++k) {
        const double lo = std::max(grid[k], c);
        const double hi = std::min(grid[k + 1], d);
        if (lo < hi) s += piece_arc(f, k, lo, hi);
    }
    return s;
}

// Jump norms at grid points: forward jumps on points accepted by `plus_in`,
// backward jumps on points accepted by `minus_in`.
template <class PlusIn, class MinusIn>
double jump_part(const PiecewiseFunction& f, PlusIn plus_in, MinusIn minus_in) {
    double s = 0.0;
    for (std::size_t k = 0; k < f.grid().size(); ++k) {
        const double t = f.grid()[k];
        const bool p = plus_in(t);
        const bool m = minus_in(t);
        if (!p && !m) continue;
        auto [minus, plus] = one_sided_jumps(f, k);
        if (p) s += plus.norm();
        if (m) s += minus.norm();
    }
    return s;
}

void check_within(const PiecewiseFunction& f, double c, double d) {
    if (!(f.a() <= c && c <= d && d <= f.b()))
        throw DomainError("[" + format_real(c) + "," + format_real(d) + "] is not within the domain");
}

}  // namespace

VariationResult var_compact(const PiecewiseFunction& f, double c, double d) {
    check_within(f, c, d);
    if (c == d) return {};
    VariationResult r;
    r.continuous_contribution = continuous_part(f, c, d);
    r.jump_contribution = jump_part(
        f, [&](double t) { return c <= t && t < d; }, [&](double t) { return c < t && t <= d; });
    r.total = r.continuous_contribution + r.jump_contribution;
    return r;
}

VariationResult var_interval(const PiecewiseFunction& f, const Interval& j) {
    const double c = j.lo();
    const double d = j.hi();
    check_within(f, c, d);
    if (j.degenerate()) return {};
    VariationResult r;
    r.continuous_contribution = continuous_part(f, c, d);
    // A closed left end keeps the forward jump at c; a closed right end keeps
    // the backward jump at d.
    r.jump_contribution = jump_part(
        f, [&](double t) { return (c < t || (t == c && j.lo_closed())) && t < d; },
        [&](double t) { return c < t && (t < d || (t == d && j.hi_closed())); });
    r.total = r.continuous_contribution + r.jump_contribution;
    return r;
}

VariationResult var_elementary(const PiecewiseFunction& f, const ElementarySet& e) {
    if (!e.within(f.a(), f.b())) throw DomainError("set " + e.to_string() + " is not within the domain");
    VariationResult r;
    for (const Interval& j : e.parts()) {
        VariationResult p = var_interval(f, j);
        r.continuous_contribution += p.continuous_contribution;
        r.jump_contribution += p.jump_contribution;
    }
    r.total = r.continuous_contribution + r.jump_contribution;
    return r;
}

std::vector<double> contracting_variation(const PiecewiseFunction& f, std::span<const ElementarySet> family) {
    if (!is_continuous(f)) throw ArgumentError("contracting_variation requires a continuous function");
    for (std::size_t n = 1; n < family.size(); ++n)
        if (!is_subset(family[n], family[n - 1]))
            throw ArgumentError("family is not contracting at index " + std::to_string(n));
    std::vector<double> v;
    v.reserve(family.size());
    for (const ElementarySet& a : family) v.push_back(var_elementary(f, a).total);
    return v;
}

}  // namespace ks
