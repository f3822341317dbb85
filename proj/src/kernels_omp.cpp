#include "ks/kernels.hpp"

#include <omp.h>

#include <vector>

namespace ks::kernels {

namespace {

std::size_t block_count(std::size_t items) { return (items + kBlock - 1) / kBlock; }

// Sums per-block partial vectors in block order.
Value ordered_sum(const std::vector<double>& partials, std::size_t blocks, std::size_t n) {
    Value sum(n);
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t i = 0; i < n; ++i) sum[i] += partials[b * n + i];
    return sum;
}

// eval_into throws on points outside the domain; exceptions must not escape
// a parallel region, so the range is checked up front.
void check_inside(const PiecewiseFunction& f, const TaggedDivision& p) {
    for (const TaggedItem& it : p.items)
        if (it.lo < f.a() || it.hi > f.b() || it.tag < f.a() || it.tag > f.b())
            throw DomainError("tagged division leaves the domain");
}

}  // namespace

Value rs_sum_dFg(const PiecewiseFunction& F, const PiecewiseFunction& g, const TaggedDivision& p) {
    check_pair(F, g);
    check_inside(F, p);
    const std::size_t n = g.codomain().dim;
    const std::size_t items = p.items.size();
    const std::size_t blocks = block_count(items);
    std::vector<double> partials(blocks * n, 0.0);

#pragma omp parallel
    {
        std::vector<double> flo(n * n), fhi(n * n), gt(n);
#pragma omp for schedule(static)
        for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
            double* acc = &partials[static_cast<std::size_t>(b) * n];
            const std::size_t end = std::min(items, (static_cast<std::size_t>(b) + 1) * kBlock);
            for (std::size_t k = static_cast<std::size_t>(b) * kBlock; k < end; ++k) {
                const TaggedItem& it = p.items[k];
                F.eval_into(it.lo, flo);
                F.eval_into(it.hi, fhi);
                g.eval_into(it.tag, gt);
                for (std::size_t i = 0; i < n; ++i) {
                    double s = 0.0;
                    for (std::size_t j = 0; j < n; ++j) s += (fhi[i * n + j] - flo[i * n + j]) * gt[j];
                    acc[i] += s;
                }
            }
        }
    }
    return ordered_sum(partials, blocks, n);
}

Value rs_sum_Fdg(const PiecewiseFunction& F, const PiecewiseFunction& g, const TaggedDivision& p) {
    check_pair(F, g);
    check_inside(F, p);
    const std::size_t n = g.codomain().dim;
    const std::size_t items = p.items.size();
    const std::size_t blocks = block_count(items);
    std::vector<double> partials(blocks * n, 0.0);

#pragma omp parallel
    {
        std::vector<double> ft(n * n), glo(n), ghi(n);
#pragma omp for schedule(static)
        for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
            double* acc = &partials[static_cast<std::size_t>(b) * n];
            const std::size_t end = std::min(items, (static_cast<std::size_t>(b) + 1) * kBlock);
            for (std::size_t k = static_cast<std::size_t>(b) * kBlock; k < end; ++k) {
                const TaggedItem& it = p.items[k];
                F.eval_into(it.tag, ft);
                g.eval_into(it.lo, glo);
                g.eval_into(it.hi, ghi);
                for (std::size_t i = 0; i < n; ++i) {
                    double s = 0.0;
                    for (std::size_t j = 0; j < n; ++j) s += ft[i * n + j] * (ghi[j] - glo[j]);
                    acc[i] += s;
                }
            }
        }
    }
    return ordered_sum(partials, blocks, n);
}

double division_sum(const PiecewiseFunction& f, std::span<const double> points) {
    if (points.size() < 2) return 0.0;
    for (double t : points)
        if (t < f.a() || t > f.b()) throw DomainError("division point " + format_real(t) + " outside domain");
    const Codomain& c = f.codomain();
    const std::size_t m = c.components();
    const std::size_t steps = points.size() - 1;
    const std::size_t blocks = block_count(steps);
    std::vector<double> partials(blocks, 0.0);

#pragma omp parallel
    {
        std::vector<double> prev(m), cur(m), diff(m);
#pragma omp for schedule(static)
        for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
            const std::size_t begin = static_cast<std::size_t>(b) * kBlock;
            const std::size_t end = std::min(steps, begin + kBlock);
            f.eval_into(points[begin], prev);
            double acc = 0.0;
            for (std::size_t k = begin; k < end; ++k) {
                f.eval_into(points[k + 1], cur);
                for (std::size_t i = 0; i < m; ++i) diff[i] = cur[i] - prev[i];
                acc += norm_of(c, diff);
                std::swap(prev, cur);
            }
            partials[static_cast<std::size_t>(b)] = acc;
        }
    }
    double sum = 0.0;
    for (double v : partials) sum += v;
    return sum;
}

}  // namespace ks::kernels
