#pragma once

// Regulated functions represented as piecewise polynomials with explicit node
// values. Every such function has one-sided limits everywhere, is of bounded
// variation, and is discontinuous at most at its grid points.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ks/core.hpp"
#include "ks/polynomial.hpp"

namespace ks {

inline constexpr std::size_t kDefaultMaxDegree = 8;

/// Polynomial components of one open piece; layout follows Codomain
/// (vector: one per entry, operator: row-major n*n).
using Piece = std::vector<Polynomial>;

class PiecewiseFunction {
public:
    PiecewiseFunction(Codomain codomain, std::vector<double> grid, std::vector<Piece> pieces,
                      std::vector<Element> node_values, std::size_t max_degree = kDefaultMaxDegree);

    /// Single piece on [a, b], continuous (node values taken from the piece).
    static PiecewiseFunction from_piece(Codomain codomain, double a, double b, Piece piece,
                                        std::size_t max_degree = kDefaultMaxDegree);
    static PiecewiseFunction constant(double a, double b, const Element& value);
    static PiecewiseFunction zero(Codomain codomain, double a, double b);
    /// value * chi_E on [a, b].
    static PiecewiseFunction indicator(double a, double b, const ElementarySet& e, const Element& value);

    double a() const { return grid_.front(); }
    double b() const { return grid_.back(); }
    Interval domain() const { return Interval::closed(a(), b()); }
    const Codomain& codomain() const { return codomain_; }
    std::size_t max_degree() const { return max_degree_; }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    const std::vector<Element>& node_values() const { return nodes_; }
    std::size_t piece_count() const { return pieces_.size(); }

    Element eval(double t) const;
    Element limit_left(double t) const;
    Element limit_right(double t) const;

    /// Allocation-free evaluation; out must hold codomain().components() entries.
    void eval_into(double t, std::span<double> out) const;

    /// Index of the piece whose open interval contains t, or of the piece to the
    /// right of t when t is a grid point (the last piece at t = b).
    std::size_t piece_index(double t) const;
    /// Grid index of t if t is a grid point.
    std::ptrdiff_t grid_index(double t) const;

    /// Polynomial value of piece k at t (t need not be inside the piece).
    Element piece_value(std::size_t k, double t) const;

    /// Same function on a grid refined by the given points; inserted nodes take
    /// the polynomial value so no jump is introduced.
    PiecewiseFunction refined(std::span<const double> points) const;

    bool same_shape(const PiecewiseFunction& o) const {
        return codomain_ == o.codomain_ && a() == o.a() && b() == o.b();
    }

private:
    Codomain codomain_;
    std::vector<double> grid_;
    std::vector<Piece> pieces_;
    std::vector<Element> nodes_;
    std::size_t max_degree_;
};

struct JumpRecord {
    double t;
    Element jump_minus;  ///< f(t) - f(t-), zero at t = a
    Element jump_plus;   ///< f(t+) - f(t), zero at t = b
    Element jump_full;   ///< f(t+) - f(t-) with the same endpoint conventions
};

/// One-sided jumps at grid index k. Differences at the level of floating-point
/// round-off relative to the values involved are reported as exact zeros.
std::pair<Element, Element> one_sided_jumps(const PiecewiseFunction& f, std::size_t k);

std::vector<JumpRecord> jumps(const PiecewiseFunction& f);
bool is_continuous(const PiecewiseFunction& f);

struct JordanDecomposition {
    PiecewiseFunction continuous;
    PiecewiseFunction breaks;
};

/// f = f_C + f_B with f_C continuous and f_B the break function carrying all
/// jumps of f, normalized so f_B(a) = 0.
JordanDecomposition jordan_decompose(const PiecewiseFunction& f);

/// Break function keeping only the jumps of f_b at the selected points.
PiecewiseFunction break_truncate(const PiecewiseFunction& f_b, std::span<const double> keep);

/// f * chi_E.
PiecewiseFunction restrict(const PiecewiseFunction& f, const ElementarySet& e);

/// c1 * f1 + c2 * f2 on the merged grid.
PiecewiseFunction lincomb(double c1, const PiecewiseFunction& f1, double c2, const PiecewiseFunction& f2);

// ---------------------------------------------------------------------------
// Norm envelope: ||P(t)|| for a polynomial-valued piece as a sequence of
// ordinary polynomials on sub-segments.

struct EnvelopeSegment {
    double lo;
    double hi;
    Polynomial norm;  ///< equals ||P(t)|| on [lo, hi]
};

std::vector<EnvelopeSegment> norm_envelope(const Codomain& codomain, std::span<const Polynomial> comps,
                                           double lo, double hi);

/// sup of ||f(t)|| over t in J (J within the domain).
double sup_norm(const PiecewiseFunction& f, const Interval& j);
double sup_norm(const PiecewiseFunction& f, const ElementarySet& e);
double sup_norm(const PiecewiseFunction& f);

}  // namespace ks
