#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ks {

/// Real polynomial in the monomial basis, coefficients in ascending order.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(double v) { return Polynomial({v}); }
    static Polynomial monomial(std::size_t degree, double scale = 1.0);

    /// Degree of the polynomial; the zero polynomial reports 0.
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<double>& coeffs() const { return c_; }
    double coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

    double operator()(double t) const;

    Polynomial derivative() const;
    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const;
    /// Exact definite integral over [lo, hi].
    double integral(double lo, double hi) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(double s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    static constexpr std::size_t kSingleTermMinSize = 16;

    void trim();
    std::vector<double> c_;
    bool single_term_ = false;  ///< c t^k with k >= kSingleTermMinSize
};

/// Points in the open interval (lo, hi) that split it into sub-intervals on
/// which p keeps a constant sign. Every sign change of p in (lo, hi) is
/// located to within about one ulp by bisection on a monotone bracket; extra
/// split points (exact zeros without sign change) may be reported.
std::vector<double> sign_change_points(const Polynomial& p, double lo, double hi);

/// max |p(t)| for t in [lo, hi].
double max_abs(const Polynomial& p, double lo, double hi);

}  // namespace ks
