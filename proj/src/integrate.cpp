#include "ks/integrate.hpp"

#include <algorithm>

#include "ks/kernels.hpp"
#include "ks/variation.hpp"

namespace ks {

namespace {

using kernels::check_pair;

std::vector<double> merged_breaks(const PiecewiseFunction& F, const PiecewiseFunction& g, double c, double d) {
    std::vector<double> pts{c, d};
    for (double t : F.grid())
        if (t > c && t < d) pts.push_back(t);
    for (double t : g.grid())
        if (t > c && t < d) pts.push_back(t);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<Piece> derivatives(const PiecewiseFunction& f) {
    std::vector<Piece> out;
    out.reserve(f.piece_count());
    for (const Piece& p : f.pieces()) {
        Piece d;
        d.reserve(p.size());
        for (const Polynomial& q : p) d.push_back(q.derivative());
        out.push_back(std::move(d));
    }
    return out;
}

// sum over segments of int A(t) B(t) dt, A an n x n matrix polynomial and B a
// vector polynomial, selected per segment.
template <class PickA, class PickB>
Value product_integral(std::size_t n, const std::vector<double>& breaks, PickA pick_a, PickB pick_b) {
    Value out(n);
    for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
        const double u = breaks[s];
        const double v = breaks[s + 1];
        const double mid = 0.5 * (u + v);
        const Piece& A = pick_a(mid);
        const Piece& B = pick_b(mid);
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial row;
            for (std::size_t j = 0; j < n; ++j) row += A[i * n + j] * B[j];
            out[i] += row.integral(u, v);
        }
    }
    return out;
}

// One-sided jumps of f at t; zero when t is not a grid point.
std::pair<Element, Element> jumps_at(const PiecewiseFunction& f, double t) {
    std::ptrdiff_t k = f.grid_index(t);
    if (k < 0) return {Element(f.codomain()), Element(f.codomain())};
    return one_sided_jumps(f, static_cast<std::size_t>(k));
}

Value apply(const Element& op, const Element& x) { return op.as_operator() * x.as_value(); }

void check_sub(const PiecewiseFunction& F, double c, double d) {
    if (!(F.a() <= c && c <= d && d <= F.b()))
        throw DomainError("[" + format_real(c) + "," + format_real(d) + "] is not within the domain");
}

}  // namespace

IntegralResult ks_dFg(const PiecewiseFunction& F, const PiecewiseFunction& g) { return ks_dFg(F, g, F.a(), F.b()); }

IntegralResult ks_dFg(const PiecewiseFunction& F, const PiecewiseFunction& g, double c, double d) {
    check_pair(F, g);
    check_sub(F, c, d);
    const std::size_t n = g.codomain().dim;
    IntegralResult r{Value(n), Value(n), Value(n)};
    if (c == d) return r;

    const std::vector<Piece> dF = derivatives(F);
    r.continuous_contribution = product_integral(
        n, merged_breaks(F, g, c, d), [&](double t) -> const Piece& { return dF[F.piece_index(t)]; },
        [&](double t) -> const Piece& { return g.pieces()[g.piece_index(t)]; });

    for (std::size_t k = 0; k < F.grid().size(); ++k) {
        const double t = F.grid()[k];
        if (t < c || t > d) continue;
        auto [minus, plus] = one_sided_jumps(F, k);
        Element w(F.codomain());
        if (t < d) w += plus;
        if (t > c) w += minus;
        if (!w.is_zero()) r.jump_contribution += apply(w, g.eval(t));
    }
    r.value = r.continuous_contribution + r.jump_contribution;
    return r;
}

IntegralResult ks_Fdg(const PiecewiseFunction& F, const PiecewiseFunction& g) {
    check_pair(F, g);
    const std::size_t n = g.codomain().dim;
    IntegralResult r{Value(n), Value(n), Value(n)};

    const std::vector<Piece> dg = derivatives(g);
    r.continuous_contribution = product_integral(
        n, merged_breaks(F, g, F.a(), F.b()), [&](double t) -> const Piece& { return F.pieces()[F.piece_index(t)]; },
        [&](double t) -> const Piece& { return dg[g.piece_index(t)]; });

    for (std::size_t k = 0; k < g.grid().size(); ++k) {
        auto [minus, plus] = one_sided_jumps(g, k);
        Element w = minus + plus;
        if (!w.is_zero()) r.jump_contribution += apply(F.eval(g.grid()[k]), w);
    }
    r.value = r.continuous_contribution + r.jump_contribution;
    return r;
}

Value integral_over_point(const PiecewiseFunction& F, const PiecewiseFunction& g, double tau) {
    check_pair(F, g);
    if (tau < F.a() || tau > F.b()) throw DomainError("point " + format_real(tau) + " outside domain");
    auto [minus, plus] = jumps_at(F, tau);
    return apply(minus + plus, g.eval(tau));
}

IntegralResult interval_integral(const PiecewiseFunction& F, const PiecewiseFunction& g, const Interval& j) {
    check_pair(F, g);
    if (!j.within(F.a(), F.b())) throw DomainError("interval " + j.to_string() + " is not within the domain");
    const std::size_t n = g.codomain().dim;
    if (j.degenerate()) {
        Value v = integral_over_point(F, g, j.lo());
        return {v, Value(n), v};
    }
    const double c = j.lo();
    const double d = j.hi();
    IntegralResult r = ks_dFg(F, g, c, d);

    auto [minus_c, plus_c] = jumps_at(F, c);
    auto [minus_d, plus_d] = jumps_at(F, d);
    const Value gc = g.eval(c).as_value();
    const Value gd = g.eval(d).as_value();
    if (j.lo_closed())
        r.jump_contribution += minus_c.as_operator() * gc;
    else
        r.jump_contribution -= plus_c.as_operator() * gc;
    if (j.hi_closed())
        r.jump_contribution += plus_d.as_operator() * gd;
    else
        r.jump_contribution -= minus_d.as_operator() * gd;
    r.value = r.continuous_contribution + r.jump_contribution;
    return r;
}

Value integral_over_interval(const PiecewiseFunction& F, const PiecewiseFunction& g, const Interval& j) {
    return interval_integral(F, g, j).value;
}

IntegralResult integral_over_elementary(const PiecewiseFunction& F, const PiecewiseFunction& g,
                                        const ElementarySet& e) {
    check_pair(F, g);
    if (!e.within(F.a(), F.b())) throw DomainError("set " + e.to_string() + " is not within the domain");
    const std::size_t n = g.codomain().dim;
    IntegralResult r{Value(n), Value(n), Value(n)};
    for (const Interval& j : e.parts()) {
        IntegralResult p = interval_integral(F, g, j);
        r.continuous_contribution += p.continuous_contribution;
        r.jump_contribution += p.jump_contribution;
    }
    r.value = r.continuous_contribution + r.jump_contribution;
    return r;
}

IntegralResult integral_over_elementary_Fdg(const PiecewiseFunction& F, const PiecewiseFunction& g,
                                            const ElementarySet& e) {
    check_pair(F, g);
    return ks_Fdg(restrict(F, e), g);
}

double estimate_bound(const PiecewiseFunction& F, const PiecewiseFunction& g, const Interval& j) {
    check_pair(F, g);
    if (!j.within(F.a(), F.b())) throw DomainError("interval " + j.to_string() + " is not within the domain");
    const double c = j.lo();
    const double d = j.hi();
    auto [minus_c, plus_c] = jumps_at(F, c);
    auto [minus_d, plus_d] = jumps_at(F, d);
    if (j.degenerate()) return (minus_c.norm() + plus_c.norm()) * g.eval(c).norm();
    double bound = var_interval(F, j).total * sup_norm(g, j);
    if (j.lo_closed()) bound += minus_c.norm() * g.eval(c).norm();
    if (j.hi_closed()) bound += plus_d.norm() * g.eval(d).norm();
    return bound;
}

double estimate_bound_elementary(const PiecewiseFunction& F, const PiecewiseFunction& g, const ElementarySet& e) {
    check_pair(F, g);
    if (!is_continuous(F)) throw ArgumentError("elementary-set estimate requires a continuous integrator");
    if (e.empty()) return 0.0;
    return var_elementary(F, e).total * sup_norm(g, e);
}

SaksCorrections saks_identity_report(const PiecewiseFunction& F, const PiecewiseFunction& g, double c, double d) {
    check_pair(F, g);
    check_sub(F, c, d);
    auto [minus_c, plus_c] = jumps_at(F, c);
    auto [minus_d, plus_d] = jumps_at(F, d);
    return {apply(minus_c, g.eval(c)), apply(plus_d, g.eval(d))};
}

}  // namespace ks
