#pragma once

// Variation of piecewise-polynomial functions on compact intervals, on
// arbitrary bounded intervals, and on elementary sets.

#include <span>
#include <vector>

#include "ks/core.hpp"
#include "ks/funcspace.hpp"

namespace ks {

struct VariationResult {
    double total = 0.0;
    double continuous_contribution = 0.0;  ///< integral of ||f_C'|| over the pieces
    double jump_contribution = 0.0;        ///< sum of one-sided jump norms
};

/// Jordan variation of f on [c, d]; c == d gives zero.
VariationResult var_compact(const PiecewiseFunction& f, double c, double d);

/// Variation over an arbitrary interval (supremum over generalized divisions
/// of J). Open ends drop the corresponding endpoint jump.
VariationResult var_interval(const PiecewiseFunction& f, const Interval& j);

/// Sum of interval variations over the minimal decomposition of E.
VariationResult var_elementary(const PiecewiseFunction& f, const ElementarySet& e);

/// v_n = var(f, A_n) for a contracting family of elementary sets and a
/// continuous f. Throws ArgumentError if f has jumps or A_{n+1} is not a
/// subset of A_n.
std::vector<double> contracting_variation(const PiecewiseFunction& f, std::span<const ElementarySet> family);

}  // namespace ks
