#include "ks/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace ks {

Polynomial Polynomial::monomial(std::size_t degree, double scale) {
    std::vector<double> c(degree + 1, 0.0);
    c[degree] = scale;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
    single_term_ = c_.size() > kSingleTermMinSize &&
                   std::all_of(c_.begin(), c_.end() - 1, [](double x) { return x == 0.0; });
}

double Polynomial::operator()(double t) const {
    // Horner on a long c t^k runs through subnormals for small t.
    if (single_term_) return c_.back() * std::pow(t, static_cast<double>(c_.size() - 1));
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    if (c_.empty()) return {};
    std::vector<double> a(c_.size() + 1, 0.0);
    for (std::size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<double>(k + 1);
    return Polynomial(std::move(a));
}

double Polynomial::integral(double lo, double hi) const {
    if (c_.empty() || lo == hi) return 0.0;
    Polynomial a = antiderivative();
    return a(hi) - a(lo);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(double s) {
    for (double& v : c_) v *= s;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

namespace {

// Root of a polynomial that is monotone on [lo, hi] with f(lo), f(hi) of
// opposite signs.
double bisect(const Polynomial& p, double lo, double hi, double flo) {
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = p(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> sign_change_points(const Polynomial& p, double lo, double hi) {
    std::vector<double> out;
    if (!(lo < hi) || p.is_constant()) return out;
    // c t^k vanishes only at 0; high-degree monomials would otherwise recurse k times.
    const auto& c = p.coeffs();
    if (std::all_of(c.begin(), c.end() - 1, [](double x) { return x == 0.0; })) {
        if (lo < 0.0 && 0.0 < hi) out.push_back(0.0);
        return out;
    }
    if (p.degree() == 1) {
        double r = -p.coeff(0) / p.coeff(1);
        if (r > lo && r < hi) out.push_back(r);
        return out;
    }
    // p is monotone between consecutive critical points.
    std::vector<double> knots{lo};
    for (double c : sign_change_points(p.derivative(), lo, hi)) knots.push_back(c);
    knots.push_back(hi);

    std::vector<double> vals(knots.size());
    for (std::size_t k = 0; k < knots.size(); ++k) vals[k] = p(knots[k]);

    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
        if (k > 0 && vals[k] == 0.0) out.push_back(knots[k]);
        if ((vals[k] < 0.0 && vals[k + 1] > 0.0) || (vals[k] > 0.0 && vals[k + 1] < 0.0))
            out.push_back(bisect(p, knots[k], knots[k + 1], vals[k]));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double max_abs(const Polynomial& p, double lo, double hi) {
    double m = std::max(std::abs(p(lo)), std::abs(p(hi)));
    if (p.degree() >= 2)
        for (double c : sign_change_points(p.derivative(), lo, hi)) m = std::max(m, std::abs(p(c)));
    return m;
}

}  // namespace ks
