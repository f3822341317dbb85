#pragma once

// Gauges, delta-fine tagged divisions and Riemann-Stieltjes sums. The limit
// of sums over finer and finer gauges gives an estimate of the
// Kurzweil-Stieltjes integral that is independent of the closed-form engine.

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ks/core.hpp"
#include "ks/division.hpp"
#include "ks/funcspace.hpp"

namespace ks {

class GaugeTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OracleFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A strictly positive function delta on [a, b]. Evaluation must be
/// deterministic.
class Gauge {
public:
    explicit Gauge(std::function<double(double)> delta) : delta_(std::move(delta)) {}

    double operator()(double t) const { return delta_(t); }

    static Gauge constant(double delta);
    /// delta(t) = dist(t, S) / 2 off S and delta(s) = at_point on S. When
    /// at_point is at most the gap between points of S, every delta-fine
    /// division tags each s in S at s itself.
    static Gauge jump_forcing(std::vector<double> points, double at_point = 1.0);
    static Gauge min(Gauge g1, Gauge g2);

private:
    std::function<double(double)> delta_;
};

enum class TagPolicy {
    endpoints_first,  ///< try u, v, then the midpoint
    midpoint_first,   ///< try the midpoint, then u, v
};

struct CousinOptions {
    int max_depth = 60;
    TagPolicy policy = TagPolicy::endpoints_first;
};

/// delta-fine tagged division of [a, b] by recursive bisection.
/// Throws GaugeTooSmall when the depth cap is exceeded.
TaggedDivision cousin_partition(const Gauge& gauge, double a, double b, CousinOptions options = {});

bool is_delta_fine(const TaggedDivision& p, const Gauge& gauge);

Value rs_sum_dFg(const PiecewiseFunction& F, const PiecewiseFunction& g, const TaggedDivision& p);
Value rs_sum_Fdg(const PiecewiseFunction& F, const PiecewiseFunction& g, const TaggedDivision& p);

enum class Orientation { dFg, Fdg };

struct OracleOptions {
    double tol = 1e-8;
    int max_level = 40;
    /// Refuse levels whose constant gauge alone implies more items than this.
    std::size_t max_items = std::size_t{1} << 26;
};

struct OracleResult {
    Value value;
    int level = 0;           ///< gauge level k of the returned sum
    std::size_t items = 0;   ///< size of the division at that level
};

/// Sums over divisions fine for delta_k = min(jump forcing, 2^-k (b - a)),
/// stopping at the first k >= 3 where the last three sums agree pairwise
/// within tol. Throws OracleFailure on non-convergence.
OracleResult oracle_integral(const PiecewiseFunction& F, const PiecewiseFunction& g, Orientation orientation,
                             OracleOptions options = {});

/// Gauge used by the oracle at level k.
Gauge oracle_gauge(const PiecewiseFunction& F, const PiecewiseFunction& g, int level);

}  // namespace ks
