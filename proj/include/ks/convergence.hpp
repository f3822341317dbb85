#pragma once

// Bounded-convergence harness: realizes sequences g_n with a pointwise limit g
// and a uniform bound K, checks the hypotheses on the realized data, and
// compares int d[F] g_n against int d[F] g.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ks/core.hpp"
#include "ks/funcspace.hpp"

namespace ks {

class HypothesisViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FamilyKind { power, spike, truncation, custom_list };

std::string to_string(FamilyKind kind);
/// Accepts "power", "spike", "truncation", "custom-list"; ArgumentError otherwise.
FamilyKind family_kind_from_string(const std::string& name);

struct SequenceFamily {
    SequenceFamily(FamilyKind kind, PiecewiseFunction limit, double bound)
        : kind(kind), limit(std::move(limit)), bound(bound) {}

    FamilyKind kind;
    PiecewiseFunction limit;  ///< pointwise limit g (vector-valued)
    double bound;             ///< declared K with ||g_n||_inf <= K

    double center = 0.0;  ///< spike
    double height = 1.0;  ///< spike
    std::vector<double> order;                 ///< truncation: jump points in keep order
    std::vector<PiecewiseFunction> members;    ///< custom-list: g_1, g_2, ...

    /// g_n = t^n (1, ..., 1) on [0, 1]; limit (1, ..., 1) chi_[1]; K = 1.
    static SequenceFamily power(std::size_t dim = 1);
    /// g_n = K chi_[c, c + 1/n] (1, ..., 1) on [a, b]; limit K chi_[c].
    static SequenceFamily spike(double a, double b, double c, double height, std::size_t dim = 1);
    /// g_n = f_b truncated to its first n jumps in `order`; limit f_b. Without
    /// an explicit bound, K is the largest sup norm over the family.
    static SequenceFamily truncation(PiecewiseFunction f_b, std::vector<double> order);
    static SequenceFamily truncation(PiecewiseFunction f_b, std::vector<double> order, double bound);
    static SequenceFamily custom(std::vector<PiecewiseFunction> members, PiecewiseFunction limit, double bound);
};

/// g_n for n >= 1.
PiecewiseFunction realize(const SequenceFamily& family, std::size_t n);

struct ConvergenceEntry {
    std::size_t n;
    Value integral;
    double error;  ///< ||integral - integral_limit||
};

struct ConvergenceReport {
    std::vector<ConvergenceEntry> entries;  ///< ascending n
    Value integral_limit;
    bool passed = false;  ///< error at the largest n below threshold
    double threshold = 0.0;
    std::size_t sample_points = 0;
};

struct ConvergenceOptions {
    /// Hook invoked once per integral, right before it is computed; n = 0
    /// stands for the limit integral. Calls are serialized.
    std::function<void(std::size_t n)> on_integral;
};

/// Deterministic sample grid of [a, b]: the endpoints, every listed point, and
/// Chebyshev nodes filling the total up to kSampleGridSize.
inline constexpr std::size_t kSampleGridSize = 210;
std::vector<double> sample_grid(double a, double b, std::span<const double> extra);

/// Throws HypothesisViolation when any realized g_n exceeds the bound or the
/// sampled pointwise check fails; no integral is computed in that case.
ConvergenceReport run_bounded_convergence(const PiecewiseFunction& F, const SequenceFamily& family,
                                          std::span<const std::size_t> ns, double threshold,
                                          const ConvergenceOptions& options = {});

struct BreakLimit {
    Value engine_value;  ///< int d[F_B] g by the engine
    Value sum_value;     ///< sum over jump points of [F(t+) - F(t-)] g(t)
};
BreakLimit verify_break_limit(const PiecewiseFunction& F, const PiecewiseFunction& g);

}  // namespace ks
