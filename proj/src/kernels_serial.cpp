#include "ks/kernels.hpp"

#include <vector>

namespace ks::kernels {

void check_pair(const PiecewiseFunction& F, const PiecewiseFunction& g) {
    if (F.codomain().kind != Kind::op) throw ArgumentError("integrator must be operator-valued");
    if (g.codomain().kind != Kind::vector) throw ArgumentError("integrand must be vector-valued");
    if (F.codomain().dim != g.codomain().dim)
        throw ArgumentError("dimension mismatch: operator dim " + std::to_string(F.codomain().dim) +
                            ", vector dim " + std::to_string(g.codomain().dim));
    if (F.a() != g.a() || F.b() != g.b()) throw ArgumentError("integrator and integrand domains differ");
}

namespace serial {

Value rs_sum_dFg(const PiecewiseFunction& F, const PiecewiseFunction& g, const TaggedDivision& p) {
    check_pair(F, g);
    const std::size_t n = g.codomain().dim;
    std::vector<double> flo(n * n), fhi(n * n), gt(n);
    Value sum(n);
    for (const TaggedItem& it : p.items) {
        F.eval_into(it.lo, flo);
        F.eval_into(it.hi, fhi);
        g.eval_into(it.tag, gt);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += (fhi[i * n + j] - flo[i * n + j]) * gt[j];
            sum[i] += s;
        }
    }
    return sum;
}

Value rs_sum_Fdg(const PiecewiseFunction& F, const PiecewiseFunction& g, const TaggedDivision& p) {
    check_pair(F, g);
    const std::size_t n = g.codomain().dim;
    std::vector<double> ft(n * n), glo(n), ghi(n);
    Value sum(n);
    for (const TaggedItem& it : p.items) {
        F.eval_into(it.tag, ft);
        g.eval_into(it.lo, glo);
        g.eval_into(it.hi, ghi);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += ft[i * n + j] * (ghi[j] - glo[j]);
            sum[i] += s;
        }
    }
    return sum;
}

double division_sum(const PiecewiseFunction& f, std::span<const double> points) {
    const Codomain& c = f.codomain();
    const std::size_t m = c.components();
    std::vector<double> prev(m), cur(m), diff(m);
    double sum = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        f.eval_into(points[k], cur);
        if (k > 0) {
            for (std::size_t i = 0; i < m; ++i) diff[i] = cur[i] - prev[i];
            sum += norm_of(c, diff);
        }
        std::swap(prev, cur);
    }
    return sum;
}

}  // namespace serial
}  // namespace ks::kernels
