#pragma once

// Data-parallel sums used by the gauge oracle and the variation checks.
// Each kernel has an OpenMP implementation and a plain serial reference with
// the same contract; the serial versions exist for testing and benchmarking.
//
// The parallel kernels reduce fixed-size blocks in index order, so results do
// not depend on the number of threads.

#include <span>

#include "ks/core.hpp"
#include "ks/division.hpp"
#include "ks/funcspace.hpp"

namespace ks::kernels {

inline constexpr std::size_t kBlock = 2048;

/// sum_j [F(alpha_j) - F(alpha_{j-1})] g(tag_j)
Value rs_sum_dFg(const PiecewiseFunction& F, const PiecewiseFunction& g, const TaggedDivision& p);
/// sum_j F(tag_j) [g(alpha_j) - g(alpha_{j-1})]
Value rs_sum_Fdg(const PiecewiseFunction& F, const PiecewiseFunction& g, const TaggedDivision& p);
/// sum_j ||f(x_j) - f(x_{j-1})|| over consecutive points.
double division_sum(const PiecewiseFunction& f, std::span<const double> points);

namespace serial {
Value rs_sum_dFg(const PiecewiseFunction& F, const PiecewiseFunction& g, const TaggedDivision& p);
Value rs_sum_Fdg(const PiecewiseFunction& F, const PiecewiseFunction& g, const TaggedDivision& p);
double division_sum(const PiecewiseFunction& f, std::span<const double> points);
}  // namespace serial

/// Throws ArgumentError unless F is operator-valued, g vector-valued, both on
/// the same domain and dimension.
void check_pair(const PiecewiseFunction& F, const PiecewiseFunction& g);

}  // namespace ks::kernels
