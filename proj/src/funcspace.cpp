#include "ks/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ks {

namespace {

constexpr double kSnapUlps = 64.0 * std::numeric_limits<double>::epsilon();

std::vector<double> merge_points(std::span<const double> grid, std::span<const double> extra) {
    std::vector<double> out(grid.begin(), grid.end());
    for (double t : extra)
        if (t > grid.front() && t < grid.back()) out.push_back(t);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Piece zero_piece(const Codomain& c) { return Piece(c.components()); }

Piece constant_piece(const Element& v) {
    Piece p;
    p.reserve(v.size());
    for (double x : v.data()) p.push_back(Polynomial::constant(x));
    return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// PiecewiseFunction

PiecewiseFunction::PiecewiseFunction(Codomain codomain, std::vector<double> grid, std::vector<Piece> pieces,
                                     std::vector<Element> node_values, std::size_t max_degree)
    : codomain_(codomain),
      grid_(std::move(grid)),
      pieces_(std::move(pieces)),
      nodes_(std::move(node_values)),
      max_degree_(max_degree) {
    if (codomain_.dim == 0) throw ArgumentError("codomain dimension must be at least 1");
    if (grid_.size() < 2) throw ArgumentError("grid needs at least two points");
    for (std::size_t k = 0; k < grid_.size(); ++k) {
        if (!std::isfinite(grid_[k])) throw ArgumentError("grid points must be finite");
        if (k > 0 && !(grid_[k - 1] < grid_[k])) throw ArgumentError("grid must be strictly increasing");
    }
    if (pieces_.size() + 1 != grid_.size()) throw ArgumentError("expected one piece per grid interval");
    if (nodes_.size() != grid_.size()) throw ArgumentError("expected one node value per grid point");
    const std::size_t m = codomain_.components();
    for (const Piece& p : pieces_) {
        if (p.size() != m) throw ArgumentError("piece has wrong number of components for " + to_string(codomain_));
        for (const Polynomial& q : p)
            if (q.degree() > max_degree_)
                throw ArgumentError("piece degree " + std::to_string(q.degree()) + " exceeds cap " +
                                    std::to_string(max_degree_));
    }
    for (const Element& v : nodes_)
        if (!(v.codomain() == codomain_)) throw ArgumentError("node value has wrong codomain");
}

PiecewiseFunction PiecewiseFunction::from_piece(Codomain codomain, double a, double b, Piece piece,
                                                std::size_t max_degree) {
    Element va(codomain), vb(codomain);
    for (std::size_t i = 0; i < piece.size() && i < va.size(); ++i) {
        va[i] = piece[i](a);
        vb[i] = piece[i](b);
    }
    return PiecewiseFunction(codomain, {a, b}, {std::move(piece)}, {va, vb}, max_degree);
}

PiecewiseFunction PiecewiseFunction::constant(double a, double b, const Element& value) {
    return PiecewiseFunction(value.codomain(), {a, b}, {constant_piece(value)}, {value, value});
}

PiecewiseFunction PiecewiseFunction::zero(Codomain codomain, double a, double b) {
    return constant(a, b, Element(codomain));
}

PiecewiseFunction PiecewiseFunction::indicator(double a, double b, const ElementarySet& e, const Element& value) {
    return restrict(constant(a, b, value), e);
}

std::size_t PiecewiseFunction::piece_index(double t) const {
    auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
    std::size_t k = static_cast<std::size_t>(it - grid_.begin());
    if (k == 0) return 0;
    return std::min(k - 1, pieces_.size() - 1);
}

std::ptrdiff_t PiecewiseFunction::grid_index(double t) const {
    auto it = std::lower_bound(grid_.begin(), grid_.end(), t);
    if (it != grid_.end() && *it == t) return it - grid_.begin();
    return -1;
}

Element PiecewiseFunction::piece_value(std::size_t k, double t) const {
    Element v(codomain_);
    const Piece& p = pieces_[k];
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[i](t);
    return v;
}

void PiecewiseFunction::eval_into(double t, std::span<double> out) const {
    if (t < a() || t > b()) throw DomainError("evaluation point " + format_real(t) + " outside domain");
    auto it = std::lower_bound(grid_.begin(), grid_.end(), t);
    if (*it == t) {
        const Element& v = nodes_[static_cast<std::size_t>(it - grid_.begin())];
        std::copy(v.data().begin(), v.data().end(), out.begin());
        return;
    }
    const Piece& p = pieces_[static_cast<std::size_t>(it - grid_.begin()) - 1];
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i](t);
}

Element PiecewiseFunction::eval(double t) const {
    std::vector<double> buf(codomain_.components());
    eval_into(t, buf);
    return Element(codomain_, std::move(buf));
}

Element PiecewiseFunction::limit_left(double t) const {
    if (!(t > a() && t <= b())) throw DomainError("left limit at " + format_real(t) + " outside (a,b]");
    auto it = std::lower_bound(grid_.begin(), grid_.end(), t);
    return piece_value(static_cast<std::size_t>(it - grid_.begin()) - 1, t);
}

Element PiecewiseFunction::limit_right(double t) const {
    if (!(t >= a() && t < b())) throw DomainError("right limit at " + format_real(t) + " outside [a,b)");
    auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
    return piece_value(static_cast<std::size_t>(it - grid_.begin()) - 1, t);
}

PiecewiseFunction PiecewiseFunction::refined(std::span<const double> points) const {
    std::vector<double> grid = merge_points(grid_, points);
    if (grid.size() == grid_.size()) return *this;
    std::vector<Piece> pieces;
    std::vector<Element> nodes;
    pieces.reserve(grid.size() - 1);
    nodes.reserve(grid.size());
    std::size_t src = 0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double t = grid[k];
        while (src + 1 < grid_.size() && grid_[src + 1] <= t) ++src;
        if (grid_[src] == t)
            nodes.push_back(nodes_[src]);
        else
            nodes.push_back(piece_value(src, t));
        if (k + 1 < grid.size()) pieces.push_back(pieces_[std::min(src, pieces_.size() - 1)]);
    }
    return PiecewiseFunction(codomain_, std::move(grid), std::move(pieces), std::move(nodes), max_degree_);
}

// ---------------------------------------------------------------------------
// Jumps and decomposition

std::pair<Element, Element> one_sided_jumps(const PiecewiseFunction& f, std::size_t k) {
    const double t = f.grid()[k];
    const Element& node = f.node_values()[k];
    Element minus(f.codomain());
    Element plus(f.codomain());
    double scale = node.norm();
    if (k > 0) {
        Element left = f.piece_value(k - 1, t);
        scale = std::max(scale, left.norm());
        minus = node - left;
    }
    if (k + 1 < f.grid().size()) {
        Element right = f.piece_value(k, t);
        scale = std::max(scale, right.norm());
        plus = right - node;
    }
    const double tol = kSnapUlps * scale;
    if (minus.norm() <= tol) minus = Element(f.codomain());
    if (plus.norm() <= tol) plus = Element(f.codomain());
    return {minus, plus};
}

std::vector<JumpRecord> jumps(const PiecewiseFunction& f) {
    std::vector<JumpRecord> out;
    for (std::size_t k = 0; k < f.grid().size(); ++k) {
        auto [minus, plus] = one_sided_jumps(f, k);
        if (minus.is_zero() && plus.is_zero()) continue;
        Element full = minus + plus;
        out.push_back({f.grid()[k], std::move(minus), std::move(plus), std::move(full)});
    }
    return out;
}

bool is_continuous(const PiecewiseFunction& f) { return jumps(f).empty(); }

namespace {

// Piecewise-constant break function on f's grid built from the one-sided
// jumps selected by `take`.
template <class Take>
PiecewiseFunction build_break(const PiecewiseFunction& f, Take take) {
    const Codomain& c = f.codomain();
    const std::size_t m = f.grid().size();
    std::vector<Element> nodes;
    std::vector<Piece> pieces;
    nodes.reserve(m);
    pieces.reserve(m - 1);
    Element level(c);
    for (std::size_t k = 0; k < m; ++k) {
        auto [minus, plus] = one_sided_jumps(f, k);
        const bool use = take(f.grid()[k]);
        if (use && k > 0) level += minus;
        nodes.push_back(level);
        if (use && k + 1 < m) level += plus;
        if (k + 1 < m) pieces.push_back(constant_piece(level));
    }
    return PiecewiseFunction(c, f.grid(), std::move(pieces), std::move(nodes), f.max_degree());
}

}  // namespace

JordanDecomposition jordan_decompose(const PiecewiseFunction& f) {
    PiecewiseFunction fb = build_break(f, [](double) { return true; });
    std::vector<Piece> pieces;
    std::vector<Element> nodes;
    pieces.reserve(f.piece_count());
    for (std::size_t k = 0; k < f.piece_count(); ++k) {
        Piece p = f.pieces()[k];
        for (std::size_t i = 0; i < p.size(); ++i) p[i] -= fb.pieces()[k][i];
        pieces.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < f.grid().size(); ++k) nodes.push_back(f.node_values()[k] - fb.node_values()[k]);
    PiecewiseFunction fc(f.codomain(), f.grid(), std::move(pieces), std::move(nodes), f.max_degree());
    return {std::move(fc), std::move(fb)};
}

PiecewiseFunction break_truncate(const PiecewiseFunction& f_b, std::span<const double> keep) {
    for (const Piece& p : f_b.pieces())
        for (const Polynomial& q : p)
            if (!q.is_constant()) throw ArgumentError("break_truncate: input is not a break function (non-constant piece)");
    if (!f_b.node_values().front().is_zero())
        throw ArgumentError("break_truncate: input is not a break function (nonzero at a)");
    std::vector<double> jump_points;
    for (const JumpRecord& r : jumps(f_b)) jump_points.push_back(r.t);
    for (double s : keep)
        if (!std::binary_search(jump_points.begin(), jump_points.end(), s))
            throw ArgumentError("break_truncate: " + format_real(s) + " is not a jump point");
    std::vector<double> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    return build_break(f_b, [&](double t) { return std::binary_search(sorted.begin(), sorted.end(), t); });
}

PiecewiseFunction restrict(const PiecewiseFunction& f, const ElementarySet& e) {
    if (!e.within(f.a(), f.b())) throw DomainError("set " + e.to_string() + " is not within the domain");
    std::vector<double> ends = e.endpoints();
    PiecewiseFunction r = f.refined(ends);
    std::vector<Piece> pieces;
    std::vector<Element> nodes;
    pieces.reserve(r.piece_count());
    nodes.reserve(r.grid().size());
    for (std::size_t k = 0; k < r.piece_count(); ++k) {
        const double mid = 0.5 * (r.grid()[k] + r.grid()[k + 1]);
        pieces.push_back(e.contains(mid) ? r.pieces()[k] : zero_piece(f.codomain()));
    }
    for (std::size_t k = 0; k < r.grid().size(); ++k)
        nodes.push_back(e.contains(r.grid()[k]) ? r.node_values()[k] : Element(f.codomain()));
    return PiecewiseFunction(f.codomain(), r.grid(), std::move(pieces), std::move(nodes), f.max_degree());
}

PiecewiseFunction lincomb(double c1, const PiecewiseFunction& f1, double c2, const PiecewiseFunction& f2) {
    if (!f1.same_shape(f2)) throw ArgumentError("lincomb: functions differ in domain or codomain");
    PiecewiseFunction r1 = f1.refined(f2.grid());
    PiecewiseFunction r2 = f2.refined(f1.grid());
    std::vector<Piece> pieces;
    std::vector<Element> nodes;
    for (std::size_t k = 0; k < r1.piece_count(); ++k) {
        Piece p = r1.pieces()[k];
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = c1 * p[i] + c2 * r2.pieces()[k][i];
        pieces.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < r1.grid().size(); ++k)
        nodes.push_back(c1 * r1.node_values()[k] + c2 * r2.node_values()[k]);
    return PiecewiseFunction(f1.codomain(), r1.grid(), std::move(pieces), std::move(nodes),
                             std::max(f1.max_degree(), f2.max_degree()));
}

// ---------------------------------------------------------------------------
// Norm envelope

std::vector<EnvelopeSegment> norm_envelope(const Codomain& codomain, std::span<const Polynomial> comps,
                                           double lo, double hi) {
    std::vector<EnvelopeSegment> out;
    if (!(lo < hi)) return out;

    std::vector<double> cuts{lo, hi};
    for (const Polynomial& p : comps)
        for (double r : sign_change_points(p, lo, hi)) cuts.push_back(r);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const std::size_t rows = codomain.dim;
    const std::size_t cols = codomain.kind == Kind::vector ? 1 : codomain.dim;

    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double u = cuts[s];
        const double v = cuts[s + 1];
        const double mid = 0.5 * (u + v);
        // Fixed signs on (u, v): each row norm is an ordinary polynomial.
        std::vector<Polynomial> row(rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const Polynomial& p = comps[i * cols + j];
                row[i] += p(mid) < 0.0 ? -1.0 * p : p;
            }
        if (rows == 1) {
            out.push_back({u, v, row[0]});
            continue;
        }
        std::vector<double> sub{u, v};
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = i + 1; k < rows; ++k)
                for (double r : sign_change_points(row[i] - row[k], u, v)) sub.push_back(r);
        std::sort(sub.begin(), sub.end());
        sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
        for (std::size_t q = 0; q + 1 < sub.size(); ++q) {
            const double m = 0.5 * (sub[q] + sub[q + 1]);
            std::size_t best = 0;
            for (std::size_t i = 1; i < rows; ++i)
                if (row[i](m) > row[best](m)) best = i;
            out.push_back({sub[q], sub[q + 1], row[best]});
        }
    }
    return out;
}

double sup_norm(const PiecewiseFunction& f, const Interval& j) {
    if (!j.within(f.a(), f.b())) throw DomainError("interval " + j.to_string() + " is not within the domain");
    if (j.degenerate()) return f.eval(j.lo()).norm();
    double m = 0.0;
    const auto& grid = f.grid();
    for (std::size_t k = 0; k < f.piece_count(); ++k) {
        const double lo = std::max(grid[k], j.lo());
        const double hi = std::min(grid[k + 1], j.hi());
        if (!(lo < hi)) continue;
        for (const EnvelopeSegment& seg : norm_envelope(f.codomain(), f.pieces()[k], lo, hi))
            m = std::max(m, max_abs(seg.norm, seg.lo, seg.hi));
    }
    for (std::size_t k = 0; k < grid.size(); ++k)
        if (j.contains(grid[k])) m = std::max(m, f.node_values()[k].norm());
    return m;
}

double sup_norm(const PiecewiseFunction& f, const ElementarySet& e) {
    double m = 0.0;
    for (const Interval& j : e.parts()) m = std::max(m, sup_norm(f, j));
    return m;
}

double sup_norm(const PiecewiseFunction& f) { return sup_norm(f, f.domain()); }

}  // namespace ks
