#include "ks/core.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <optional>

namespace ks {

std::string format_real(double x) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    (void)ec;
    return {buf.data(), end};
}

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(double lo, double hi, bool lo_closed, bool hi_closed)
    : lo_(lo), hi_(hi), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw ArgumentError("interval endpoints must be finite");
    if (lo > hi)
        throw ArgumentError("interval with lo > hi: " + format_real(lo) + " > " + format_real(hi));
    if (lo == hi && !(lo_closed && hi_closed))
        throw ArgumentError("empty interval at " + format_real(lo));
}

bool Interval::contains(double t) const {
    if (t < lo_ || t > hi_) return false;
    if (t == lo_ && !lo_closed_) return false;
    if (t == hi_ && !hi_closed_) return false;
    return true;
}

std::string Interval::to_string() const {
    if (degenerate()) return "[" + format_real(lo_) + "]";
    return std::string(lo_closed_ ? "[" : "(") + format_real(lo_) + "," + format_real(hi_) +
           (hi_closed_ ? "]" : ")");
}

namespace {

std::optional<Interval> make_interval(double lo, double hi, bool lc, bool hc) {
    if (lo > hi) return std::nullopt;
    if (lo == hi && !(lc && hc)) return std::nullopt;
    return Interval(lo, hi, lc, hc);
}

std::optional<Interval> intersect(const Interval& x, const Interval& y) {
    double lo;
    bool lc;
    if (x.lo() > y.lo()) {
        lo = x.lo();
        lc = x.lo_closed();
    } else if (y.lo() > x.lo()) {
        lo = y.lo();
        lc = y.lo_closed();
    } else {
        lo = x.lo();
        lc = x.lo_closed() && y.lo_closed();
    }
    double hi;
    bool hc;
    if (x.hi() < y.hi()) {
        hi = x.hi();
        hc = x.hi_closed();
    } else if (y.hi() < x.hi()) {
        hi = y.hi();
        hc = y.hi_closed();
    } else {
        hi = x.hi();
        hc = x.hi_closed() && y.hi_closed();
    }
    return make_interval(lo, hi, lc, hc);
}

}  // namespace

// ---------------------------------------------------------------------------
// ElementarySet

ElementarySet minimal_decomposition(std::span<const Interval> intervals) {
    std::vector<Interval> sorted(intervals.begin(), intervals.end());
    // Closed left ends first so that a part starting at the same point absorbs
    // the open one.
    std::sort(sorted.begin(), sorted.end(), [](const Interval& x, const Interval& y) {
        if (x.lo() != y.lo()) return x.lo() < y.lo();
        return x.lo_closed() && !y.lo_closed();
    });

    std::vector<Interval> parts;
    for (const Interval& j : sorted) {
        if (parts.empty()) {
            parts.push_back(j);
            continue;
        }
        Interval& cur = parts.back();
        bool touches = j.lo() < cur.hi() ||
                       (j.lo() == cur.hi() && (cur.hi_closed() || j.lo_closed()));
        if (!touches) {
            parts.push_back(j);
            continue;
        }
        double hi = cur.hi();
        bool hc = cur.hi_closed();
        if (j.hi() > hi) {
            hi = j.hi();
            hc = j.hi_closed();
        } else if (j.hi() == hi) {
            hc = hc || j.hi_closed();
        }
        cur = Interval(cur.lo(), hi, cur.lo_closed(), hc);
    }
    return ElementarySet(std::span<const Interval>(parts));
}

ElementarySet::ElementarySet(std::initializer_list<Interval> intervals)
    : ElementarySet(std::span<const Interval>(intervals.begin(), intervals.size())) {}

ElementarySet::ElementarySet(std::span<const Interval> intervals) {
    bool minimal = std::is_sorted(intervals.begin(), intervals.end(),
                                  [](const Interval& x, const Interval& y) { return x.lo() < y.lo(); });
    for (std::size_t k = 1; minimal && k < intervals.size(); ++k) {
        const Interval& p = intervals[k - 1];
        const Interval& q = intervals[k];
        if (q.lo() < p.hi() || (q.lo() == p.hi() && (p.hi_closed() || q.lo_closed())))
            minimal = false;
    }
    if (minimal)
        parts_.assign(intervals.begin(), intervals.end());
    else
        parts_ = minimal_decomposition(intervals).parts_;
}

bool ElementarySet::contains(double t) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), t,
                               [](double v, const Interval& j) { return v < j.lo(); });
    if (it == parts_.begin()) return false;
    return std::prev(it)->contains(t);
}

bool ElementarySet::within(double a, double b) const {
    return std::all_of(parts_.begin(), parts_.end(), [&](const Interval& j) { return j.within(a, b); });
}

std::vector<double> ElementarySet::endpoints() const {
    std::vector<double> pts;
    pts.reserve(2 * parts_.size());
    for (const Interval& j : parts_) {
        pts.push_back(j.lo());
        pts.push_back(j.hi());
    }
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::string ElementarySet::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ",";
        s += parts_[k].to_string();
    }
    return s;
}

ElementarySet elementary_union(const ElementarySet& e1, const ElementarySet& e2) {
    std::vector<Interval> all(e1.parts());
    all.insert(all.end(), e2.parts().begin(), e2.parts().end());
    return minimal_decomposition(all);
}

ElementarySet elementary_intersect(const ElementarySet& e1, const ElementarySet& e2) {
    std::vector<Interval> out;
    for (const Interval& x : e1.parts())
        for (const Interval& y : e2.parts())
            if (auto z = intersect(x, y)) out.push_back(*z);
    return minimal_decomposition(out);
}

ElementarySet elementary_diff(const ElementarySet& e1, const ElementarySet& e2) {
    if (e1.empty() || e2.empty()) return e1;
    // Complement of e2 inside a closed hull of both sets, then intersect with e1.
    const double lo = std::min(e1.parts().front().lo(), e2.parts().front().lo());
    const double hi = std::max(e1.parts().back().hi(), e2.parts().back().hi());
    std::vector<Interval> gaps;
    double start = lo;
    bool start_closed = true;
    for (const Interval& j : e2.parts()) {
        if (auto g = make_interval(start, j.lo(), start_closed, !j.lo_closed())) gaps.push_back(*g);
        start = j.hi();
        start_closed = !j.hi_closed();
    }
    if (auto g = make_interval(start, hi, start_closed, true)) gaps.push_back(*g);
    return elementary_intersect(e1, ElementarySet(std::span<const Interval>(gaps)));
}

int indicator(const ElementarySet& e, double t) { return e.contains(t) ? 1 : 0; }

bool is_subset(const ElementarySet& e1, const ElementarySet& e2) {
    return elementary_diff(e1, e2).empty();
}

// ---------------------------------------------------------------------------
// Values

double Value::norm() const {
    double m = 0.0;
    for (double v : x_) m = std::max(m, std::abs(v));
    return m;
}

Value& Value::operator+=(const Value& o) {
    if (o.dim() != dim()) throw ArgumentError("dimension mismatch in vector sum");
    for (std::size_t i = 0; i < x_.size(); ++i) x_[i] += o.x_[i];
    return *this;
}

Value& Value::operator-=(const Value& o) {
    if (o.dim() != dim()) throw ArgumentError("dimension mismatch in vector difference");
    for (std::size_t i = 0; i < x_.size(); ++i) x_[i] -= o.x_[i];
    return *this;
}

Value& Value::operator*=(double s) {
    for (double& v : x_) v *= s;
    return *this;
}

OperatorValue::OperatorValue(std::size_t n, std::vector<double> row_major)
    : n_(n), a_(std::move(row_major)) {
    if (a_.size() != n * n) throw ArgumentError("operator needs n*n entries");
}

OperatorValue OperatorValue::identity(std::size_t n, double scale) {
    OperatorValue id(n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = scale;
    return id;
}

double OperatorValue::norm() const { return norm_of(Codomain{Kind::op, n_}, a_); }

Value OperatorValue::apply(const Value& x) const {
    if (x.dim() != n_) throw ArgumentError("dimension mismatch in operator application");
    Value y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += a_[i * n_ + j] * x[j];
        y[i] = s;
    }
    return y;
}

OperatorValue& OperatorValue::operator+=(const OperatorValue& o) {
    if (o.n_ != n_) throw ArgumentError("dimension mismatch in operator sum");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

OperatorValue& OperatorValue::operator-=(const OperatorValue& o) {
    if (o.n_ != n_) throw ArgumentError("dimension mismatch in operator difference");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

OperatorValue& OperatorValue::operator*=(double s) {
    for (double& v : a_) v *= s;
    return *this;
}

std::string to_string(const Codomain& c) {
    return std::string(c.kind == Kind::vector ? "vector" : "operator") + "(" + std::to_string(c.dim) + ")";
}

double norm_of(const Codomain& c, std::span<const double> data) {
    double m = 0.0;
    if (c.kind == Kind::vector) {
        for (double v : data) m = std::max(m, std::abs(v));
        return m;
    }
    for (std::size_t i = 0; i < c.dim; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < c.dim; ++j) row += std::abs(data[i * c.dim + j]);
        m = std::max(m, row);
    }
    return m;
}

Element::Element(Codomain c, std::vector<double> data) : codomain_(c), data_(std::move(data)) {
    if (data_.size() != c.components())
        throw ArgumentError("element size does not match codomain " + to_string(c));
}

Element::Element(const Value& v)
    : codomain_{Kind::vector, v.dim()}, data_(v.data().begin(), v.data().end()) {}

Element::Element(const OperatorValue& a)
    : codomain_{Kind::op, a.dim()}, data_(a.data().begin(), a.data().end()) {}

double Element::norm() const { return norm_of(codomain_, data_); }

bool Element::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return v == 0.0; });
}

Value Element::as_value() const {
    if (codomain_.kind != Kind::vector) throw ArgumentError("element is not a vector");
    return Value(data_);
}

OperatorValue Element::as_operator() const {
    if (codomain_.kind != Kind::op) throw ArgumentError("element is not an operator");
    return OperatorValue(codomain_.dim, data_);
}

Element& Element::operator+=(const Element& o) {
    if (!(o.codomain_ == codomain_)) throw ArgumentError("codomain mismatch in sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (!(o.codomain_ == codomain_)) throw ArgumentError("codomain mismatch in difference");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Element& Element::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

}  // namespace ks
