#pragma once

// Interval algebra and the finite-dimensional value spaces X = R^n (max norm)
// and L(X) = n x n matrices (induced max-row-sum norm).

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ks {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Shortest decimal string that parses back to exactly the same double.
std::string format_real(double x);

// ---------------------------------------------------------------------------
// Intervals

/// Bounded, non-empty interval with independently open or closed endpoints.
/// A degenerate interval [c] has lo == hi and both ends closed.
class Interval {
public:
    Interval(double lo, double hi, bool lo_closed, bool hi_closed);

    static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
    static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
    static Interval closed_open(double lo, double hi) { return {lo, hi, true, false}; }
    static Interval open_closed(double lo, double hi) { return {lo, hi, false, true}; }
    static Interval point(double c) { return {c, c, true, true}; }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }
    bool degenerate() const { return lo_ == hi_; }

    bool contains(double t) const;
    /// True when every point of this interval lies in [a, b].
    bool within(double a, double b) const { return a <= lo_ && hi_ <= b; }

    std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_;
    double hi_;
    bool lo_closed_;
    bool hi_closed_;
};

/// Finite union of intervals, held in minimal decomposition form: parts are
/// sorted, pairwise disjoint, and no two of them unite into an interval.
class ElementarySet {
public:
    ElementarySet() = default;
    ElementarySet(std::initializer_list<Interval> intervals);
    explicit ElementarySet(std::span<const Interval> intervals);

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool contains(double t) const;
    bool within(double a, double b) const;
    /// Interval endpoints in increasing order, without duplicates.
    std::vector<double> endpoints() const;

    std::string to_string() const;

    friend bool operator==(const ElementarySet&, const ElementarySet&) = default;

private:
    std::vector<Interval> parts_;
};

ElementarySet minimal_decomposition(std::span<const Interval> intervals);
ElementarySet elementary_union(const ElementarySet& e1, const ElementarySet& e2);
ElementarySet elementary_intersect(const ElementarySet& e1, const ElementarySet& e2);
ElementarySet elementary_diff(const ElementarySet& e1, const ElementarySet& e2);
int indicator(const ElementarySet& e, double t);

/// Subset test: e1 \ e2 is empty.
bool is_subset(const ElementarySet& e1, const ElementarySet& e2);

// ---------------------------------------------------------------------------
// Value spaces

/// Element of X = R^n under the max norm.
class Value {
public:
    Value() = default;
    explicit Value(std::size_t n, double fill = 0.0) : x_(n, fill) {}
    Value(std::initializer_list<double> xs) : x_(xs) {}
    explicit Value(std::vector<double> xs) : x_(std::move(xs)) {}

    std::size_t dim() const { return x_.size(); }
    double operator[](std::size_t i) const { return x_[i]; }
    double& operator[](std::size_t i) { return x_[i]; }
    std::span<const double> data() const { return x_; }

    double norm() const;

    Value& operator+=(const Value& o);
    Value& operator-=(const Value& o);
    Value& operator*=(double s);

    friend Value operator+(Value a, const Value& b) { return a += b; }
    friend Value operator-(Value a, const Value& b) { return a -= b; }
    friend Value operator*(double s, Value a) { return a *= s; }
    friend bool operator==(const Value&, const Value&) = default;

private:
    std::vector<double> x_;
};

/// Element of L(X): an n x n matrix, row-major, under the operator norm
/// induced by the max norm on X (maximum absolute row sum).
class OperatorValue {
public:
    OperatorValue() = default;
    explicit OperatorValue(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}
    OperatorValue(std::size_t n, std::vector<double> row_major);

    static OperatorValue identity(std::size_t n, double scale = 1.0);

    std::size_t dim() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    std::span<const double> data() const { return a_; }

    double norm() const;
    Value apply(const Value& x) const;

    OperatorValue& operator+=(const OperatorValue& o);
    OperatorValue& operator-=(const OperatorValue& o);
    OperatorValue& operator*=(double s);

    friend OperatorValue operator+(OperatorValue a, const OperatorValue& b) { return a += b; }
    friend OperatorValue operator-(OperatorValue a, const OperatorValue& b) { return a -= b; }
    friend OperatorValue operator*(double s, OperatorValue a) { return a *= s; }
    friend Value operator*(const OperatorValue& a, const Value& x) { return a.apply(x); }
    friend bool operator==(const OperatorValue&, const OperatorValue&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

// ---------------------------------------------------------------------------
// Codomain-tagged values, used by the piecewise representation which stores
// either kind with the same layout.

enum class Kind { vector, op };

struct Codomain {
    Kind kind = Kind::vector;
    std::size_t dim = 1;

    std::size_t components() const { return kind == Kind::vector ? dim : dim * dim; }
    friend bool operator==(const Codomain&, const Codomain&) = default;
};

std::string to_string(const Codomain& c);

/// A vector or an operator value stored as flat components.
class Element {
public:
    Element() = default;
    explicit Element(Codomain c) : codomain_(c), data_(c.components(), 0.0) {}
    Element(Codomain c, std::vector<double> data);
    Element(const Value& v);          // NOLINT(google-explicit-constructor)
    Element(const OperatorValue& a);  // NOLINT(google-explicit-constructor)

    const Codomain& codomain() const { return codomain_; }
    std::size_t size() const { return data_.size(); }
    double operator[](std::size_t i) const { return data_[i]; }
    double& operator[](std::size_t i) { return data_[i]; }
    std::span<const double> data() const { return data_; }

    /// Max norm for vectors, induced operator norm for matrices.
    double norm() const;
    bool is_zero() const;

    Value as_value() const;
    OperatorValue as_operator() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(double s);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(double s, Element a) { return a *= s; }
    friend bool operator==(const Element&, const Element&) = default;

private:
    Codomain codomain_;
    std::vector<double> data_;
};

/// Max norm of a flat component span interpreted with the given codomain.
double norm_of(const Codomain& c, std::span<const double> data);

}  // namespace ks
