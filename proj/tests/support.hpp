#pragma once

// Shared test helpers: a seeded random corpus of piecewise-polynomial
// functions and independent brute-force oracles. Corpus data is dyadic
// (grid points on a 1/16 lattice of [a, b], coefficients multiples of 1/8) so
// that values at grid points are exact in double precision and the gauge
// bisection hits every jump point exactly.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "ks/core.hpp"
#include "ks/funcspace.hpp"

namespace kst {

using namespace ks;

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// k / denom with k uniform in [-range * denom, range * denom].
inline double dyadic(Rng& rng, int range = 2, int denom = 8) {
    return uniform_int(rng, -range * denom, range * denom) / static_cast<double>(denom);
}

inline Polynomial random_poly(Rng& rng, std::size_t max_degree) {
    const int deg = uniform_int(rng, 0, static_cast<int>(max_degree));
    std::vector<double> c(static_cast<std::size_t>(deg) + 1);
    for (double& x : c) x = dyadic(rng);
    return Polynomial(std::move(c));
}

inline Piece random_piece(Rng& rng, const Codomain& cd, std::size_t max_degree) {
    Piece p;
    for (std::size_t i = 0; i < cd.components(); ++i) p.push_back(random_poly(rng, max_degree));
    return p;
}

inline Element piece_at(const Piece& p, const Codomain& cd, double t) {
    std::vector<double> v;
    for (const Polynomial& q : p) v.push_back(q(t));
    return Element(cd, std::move(v));
}

inline Element random_element(Rng& rng, const Codomain& cd) {
    std::vector<double> v(cd.components());
    for (double& x : v) x = dyadic(rng);
    return Element(cd, std::move(v));
}

struct CorpusOptions {
    std::size_t max_pieces = 5;
    std::size_t max_degree = 3;
    std::size_t max_jumps = 4;
    bool allow_endpoint_jumps = true;
};

/// Point j/16 of the lattice on [a, b].
inline double lattice(double a, double b, int j) { return a + (b - a) * j / 16.0; }

/// Random function with at most max_jumps discontinuity points, all on the lattice.
inline PiecewiseFunction random_function(Rng& rng, const Codomain& cd, double a, double b,
                                         const CorpusOptions& opt = {}) {
    const int m = uniform_int(rng, 1, static_cast<int>(opt.max_pieces));
    std::vector<int> idx(15);
    for (int j = 0; j < 15; ++j) idx[j] = j + 1;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(static_cast<std::size_t>(m - 1));
    std::sort(idx.begin(), idx.end());
    std::vector<double> grid{a};
    for (int j : idx) grid.push_back(lattice(a, b, j));
    grid.push_back(b);

    // Choose which grid points carry a discontinuity.
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < grid.size(); ++k)
        if (opt.allow_endpoint_jumps || (k > 0 && k + 1 < grid.size())) candidates.push_back(k);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    const auto budget = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(opt.max_jumps)));
    std::vector<bool> jump(grid.size(), false);
    for (std::size_t i = 0; i < std::min(budget, candidates.size()); ++i) jump[candidates[i]] = true;

    std::vector<Piece> pieces{random_piece(rng, cd, opt.max_degree)};
    for (std::size_t k = 1; k + 1 < grid.size(); ++k) {
        Piece next = random_piece(rng, cd, opt.max_degree);
        if (!jump[k]) {
            const Element left = piece_at(pieces.back(), cd, grid[k]);
            const Element right = piece_at(next, cd, grid[k]);
            for (std::size_t i = 0; i < next.size(); ++i) next[i] += Polynomial::constant(left[i] - right[i]);
        }
        pieces.push_back(std::move(next));
    }

    std::vector<Element> nodes;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const Element base = k == 0 ? piece_at(pieces.front(), cd, grid[k]) : piece_at(pieces[k - 1], cd, grid[k]);
        if (!jump[k]) {
            nodes.push_back(base);
            continue;
        }
        const int pick = uniform_int(rng, 0, 2);
        if (pick == 0 || k == 0 || k + 1 == grid.size())
            nodes.push_back(random_element(rng, cd));
        else if (pick == 1)
            nodes.push_back(base);
        else
            nodes.push_back(piece_at(pieces[k], cd, grid[k]));
    }
    return PiecewiseFunction(cd, std::move(grid), std::move(pieces), std::move(nodes));
}

inline const std::vector<std::pair<double, double>>& corpus_domains() {
    static const std::vector<std::pair<double, double>> d{{0.0, 1.0}, {-1.0, 1.0}, {0.0, 2.0}, {-2.0, 2.0}, {0.5, 1.5}};
    return d;
}

/// Scalar helpers on [a, b].
inline PiecewiseFunction op1(Polynomial p, double a = 0.0, double b = 1.0) {
    return PiecewiseFunction::from_piece({Kind::op, 1}, a, b, {std::move(p)});
}
inline PiecewiseFunction vec1(Polynomial p, double a = 0.0, double b = 1.0) {
    return PiecewiseFunction::from_piece({Kind::vector, 1}, a, b, {std::move(p)});
}
inline PiecewiseFunction op_indicator(const ElementarySet& e, double value = 1.0, double a = 0.0, double b = 1.0) {
    return PiecewiseFunction::indicator(a, b, e, OperatorValue(1, value));
}
inline PiecewiseFunction vec_indicator(const ElementarySet& e, double value = 1.0, double a = 0.0, double b = 1.0) {
    return PiecewiseFunction::indicator(a, b, e, Value{value});
}

/// Direct sum of ||f(x_j) - f(x_{j-1})|| (no kernels involved).
inline double division_sum(const PiecewiseFunction& f, const std::vector<double>& pts) {
    double s = 0.0;
    for (std::size_t j = 1; j < pts.size(); ++j) s += (f.eval(pts[j]) - f.eval(pts[j - 1])).norm();
    return s;
}

/// Random generalized division of the interval J: strictly increasing points
/// inside J, including closed endpoints and approaching open ones.
inline std::vector<double> random_division(Rng& rng, const Interval& j, int max_points = 40) {
    std::uniform_real_distribution<double> u(j.lo(), j.hi());
    std::vector<double> pts;
    const int m = uniform_int(rng, 2, max_points);
    for (int i = 0; i < m; ++i) pts.push_back(u(rng));
    const double w = j.hi() - j.lo();
    for (int e = 1; e <= 12; ++e) {
        pts.push_back(j.lo() + w * std::ldexp(1.0, -3 * e));
        pts.push_back(j.hi() - w * std::ldexp(1.0, -3 * e));
    }
    if (j.lo_closed()) pts.push_back(j.lo());
    if (j.hi_closed()) pts.push_back(j.hi());
    std::vector<double> kept;
    for (double t : pts)
        if (j.contains(t)) kept.push_back(t);
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return kept;
}

inline Interval random_subinterval(Rng& rng, double a, double b) {
    int i = uniform_int(rng, 0, 16);
    int k = uniform_int(rng, 0, 16);
    if (i > k) std::swap(i, k);
    if (i == k) return Interval::point(lattice(a, b, i));
    return Interval(lattice(a, b, i), lattice(a, b, k), coin(rng), coin(rng));
}

inline ElementarySet random_elementary(Rng& rng, double a, double b, int max_parts = 3) {
    std::vector<Interval> parts;
    const int m = uniform_int(rng, 0, max_parts);
    for (int i = 0; i < m; ++i) parts.push_back(random_subinterval(rng, a, b));
    return minimal_decomposition(parts);
}

inline double max_abs_diff(const Value& x, const Value& y) { return (x - y).norm(); }

}  // namespace kst
