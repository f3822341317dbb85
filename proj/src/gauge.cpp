#include "ks/gauge.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "ks/kernels.hpp"

namespace ks {

bool TaggedDivision::well_formed() const {
    if (items.empty()) return false;
    for (std::size_t j = 0; j < items.size(); ++j) {
        const TaggedItem& it = items[j];
        if (!(it.lo < it.hi) || it.tag < it.lo || it.tag > it.hi) return false;
        if (j > 0 && items[j - 1].hi != it.lo) return false;
    }
    return true;
}

Gauge Gauge::constant(double delta) {
    if (!(delta > 0.0)) throw ArgumentError("gauge must be positive");
    return Gauge([delta](double) { return delta; });
}

Gauge Gauge::jump_forcing(std::vector<double> points, double at_point) {
    if (!(at_point > 0.0)) throw ArgumentError("gauge must be positive");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto pts = std::make_shared<const std::vector<double>>(std::move(points));
    return Gauge([pts, at_point](double t) {
        if (pts->empty()) return std::numeric_limits<double>::infinity();
        auto it = std::lower_bound(pts->begin(), pts->end(), t);
        double dist = std::numeric_limits<double>::infinity();
        if (it != pts->end()) {
            if (*it == t) return at_point;
            dist = *it - t;
        }
        if (it != pts->begin()) dist = std::min(dist, t - *std::prev(it));
        return 0.5 * dist;
    });
}

Gauge Gauge::min(Gauge g1, Gauge g2) {
    return Gauge([g1 = std::move(g1), g2 = std::move(g2)](double t) { return std::min(g1(t), g2(t)); });
}

TaggedDivision cousin_partition(const Gauge& gauge, double a, double b, CousinOptions options) {
    if (!(a < b)) throw ArgumentError("cousin_partition needs a < b");
    struct Task {
        double u;
        double v;
        int depth;
    };
    TaggedDivision out;
    std::vector<Task> stack{{a, b, 0}};
    while (!stack.empty()) {
        Task task = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (task.u + task.v);
        const double width = task.v - task.u;
        std::array<double, 3> candidates = options.policy == TagPolicy::endpoints_first
                                               ? std::array<double, 3>{task.u, task.v, mid}
                                               : std::array<double, 3>{mid, task.u, task.v};
        bool accepted = false;
        for (double tau : candidates) {
            const double delta = gauge(tau);
            if (!(delta > 0.0)) throw ArgumentError("gauge is not positive at " + format_real(tau));
            if (width < delta) {
                out.items.push_back({tau, task.u, task.v});
                accepted = true;
                break;
            }
        }
        if (accepted) continue;
        if (task.depth >= options.max_depth || mid <= task.u || mid >= task.v)
            throw GaugeTooSmall("bisection depth cap reached near t = " + format_real(mid));
        // Right half first so the left half is processed next.
        stack.push_back({mid, task.v, task.depth + 1});
        stack.push_back({task.u, mid, task.depth + 1});
    }
    return out;
}

bool is_delta_fine(const TaggedDivision& p, const Gauge& gauge) {
    for (const TaggedItem& it : p.items) {
        const double delta = gauge(it.tag);
        if (!(it.tag - delta < it.lo && it.hi < it.tag + delta)) return false;
    }
    return true;
}

Value rs_sum_dFg(const PiecewiseFunction& F, const PiecewiseFunction& g, const TaggedDivision& p) {
    return kernels::rs_sum_dFg(F, g, p);
}

Value rs_sum_Fdg(const PiecewiseFunction& F, const PiecewiseFunction& g, const TaggedDivision& p) {
    return kernels::rs_sum_Fdg(F, g, p);
}

Gauge oracle_gauge(const PiecewiseFunction& F, const PiecewiseFunction& g, int level) {
    std::vector<double> forced;
    for (const JumpRecord& r : jumps(F)) forced.push_back(r.t);
    for (const JumpRecord& r : jumps(g)) forced.push_back(r.t);
    const double length = F.b() - F.a();
    const double mesh = std::ldexp(length, -level);
    // Intervals tagged at a forced point are kept at the square of the mesh
    // (floored well above the bisection depth cap), so the O(width) error of
    // those few terms stays below the O(mesh^2) error of the midpoint tags.
    const double at_point = std::ldexp(length, -std::min(2 * level, 50));
    return Gauge::min(Gauge::jump_forcing(std::move(forced), at_point), Gauge::constant(mesh));
}

OracleResult oracle_integral(const PiecewiseFunction& F, const PiecewiseFunction& g, Orientation orientation,
                             OracleOptions options) {
    kernels::check_pair(F, g);
    if (!(options.tol > 0.0)) throw ArgumentError("oracle tolerance must be positive");
    std::vector<Value> sums;
    for (int k = 1; k <= options.max_level; ++k) {
        if (std::ldexp(1.0, k + 1) > static_cast<double>(options.max_items))
            throw OracleFailure("no convergence within " + std::to_string(options.max_items) + " division items (level " +
                                std::to_string(k) + ")");
        TaggedDivision p =
            cousin_partition(oracle_gauge(F, g, k), F.a(), F.b(), {.max_depth = 60, .policy = TagPolicy::midpoint_first});
        sums.push_back(orientation == Orientation::dFg ? kernels::rs_sum_dFg(F, g, p) : kernels::rs_sum_Fdg(F, g, p));
        if (k >= 3) {
            const std::size_t m = sums.size();
            const Value& s0 = sums[m - 3];
            const Value& s1 = sums[m - 2];
            const Value& s2 = sums[m - 1];
            if ((s0 - s1).norm() < options.tol && (s1 - s2).norm() < options.tol && (s0 - s2).norm() < options.tol)
                return {s2, k, p.size()};
        }
    }
    throw OracleFailure("no convergence before level " + std::to_string(options.max_level));
}

}  // namespace ks
