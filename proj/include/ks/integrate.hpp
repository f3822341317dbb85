#pragma once

// Closed-form Kurzweil-Stieltjes integration for piecewise-polynomial
// integrators and integrands.
//
// The engine splits the integrator into its continuous and break parts:
// the continuous part contributes sum over pieces of int F'(t) g(t) dt (exact
// polynomial antiderivatives; isolated node values of g do not matter there),
// and every jump point t contributes [F(t+) - F(t-)] g(t), with the
// conventions F(a-) = F(a) and F(b+) = F(b).

#include "ks/core.hpp"
#include "ks/funcspace.hpp"

namespace ks {

struct IntegralResult {
    Value value;
    Value continuous_contribution;
    Value jump_contribution;
};

/// int_a^b d[F] g over the whole domain.
IntegralResult ks_dFg(const PiecewiseFunction& F, const PiecewiseFunction& g);
/// int_c^d d[F] g for a <= c <= d <= b (F and g restricted to [c, d]).
IntegralResult ks_dFg(const PiecewiseFunction& F, const PiecewiseFunction& g, double c, double d);

/// int_a^b F d[g].
IntegralResult ks_Fdg(const PiecewiseFunction& F, const PiecewiseFunction& g);

/// int over the one-point set [tau] of d[F] g = [F(tau+) - F(tau-)] g(tau).
Value integral_over_point(const PiecewiseFunction& F, const PiecewiseFunction& g, double tau);

/// int_J d[F] g: the integral from c to d plus the endpoint corrections
/// fixed by the openness of J. Equals ks_dFg(F, restrict(g, {J})).
Value integral_over_interval(const PiecewiseFunction& F, const PiecewiseFunction& g, const Interval& j);
IntegralResult interval_integral(const PiecewiseFunction& F, const PiecewiseFunction& g, const Interval& j);

/// int_E d[F] g as the sum over the minimal decomposition of E.
IntegralResult integral_over_elementary(const PiecewiseFunction& F, const PiecewiseFunction& g,
                                        const ElementarySet& e);

/// int_E F d[g] = int_a^b (F chi_E) d[g].
IntegralResult integral_over_elementary_Fdg(const PiecewiseFunction& F, const PiecewiseFunction& g,
                                            const ElementarySet& e);

/// Right-hand side of the norm estimate for int_J d[F] g:
/// var_J F * sup_J ||g|| plus ||dF^-(c)|| ||g(c)|| when c is in J and
/// ||dF^+(d)|| ||g(d)|| when d is in J.
double estimate_bound(const PiecewiseFunction& F, const PiecewiseFunction& g, const Interval& j);

/// var(F, E) * sup_E ||g||; valid bound for continuous F only (ArgumentError otherwise).
double estimate_bound_elementary(const PiecewiseFunction& F, const PiecewiseFunction& g, const ElementarySet& e);

/// Correction terms relating the integral over [c, d] to the integral from c
/// to d: int_[c,d] = int_c^d + left + right.
struct SaksCorrections {
    Value left;   ///< dF^-(c) g(c)
    Value right;  ///< dF^+(d) g(d)
};
SaksCorrections saks_identity_report(const PiecewiseFunction& F, const PiecewiseFunction& g, double c, double d);

}  // namespace ks
