#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ks/convergence.hpp"
#include "ks/integrate.hpp"
#include "support.hpp"

using namespace ks;
using kst::Rng;

namespace {

std::vector<std::size_t> doubling(std::size_t hi) {
    std::vector<std::size_t> ns;
    for (std::size_t n = 1; n <= hi; n *= 2) ns.push_back(n);
    return ns;
}

/// t/2 Id plus unit jumps at 1/4 (both sides) and at 1 (from the left).
PiecewiseFunction jumpy_integrator() {
    const PiecewiseFunction slope = kst::op1(Polynomial{0, 0.5});
    const PiecewiseFunction j1 = kst::op_indicator({Interval::open_closed(0.25, 1.0)});
    const PiecewiseFunction j2 = kst::op_indicator({Interval::point(0.25)}, 0.5);
    const PiecewiseFunction j3 = kst::op_indicator({Interval::point(1.0)}, -2.0);
    return lincomb(1.0, lincomb(1.0, slope, 1.0, j1), 1.0, lincomb(1.0, j2, 1.0, j3));
}

/// Equality by values and one-sided limits on a fine dyadic grid.
bool same(const PiecewiseFunction& f, const PiecewiseFunction& h) {
    if (f.a() != h.a() || f.b() != h.b() || f.codomain() != h.codomain()) return false;
    for (int i = 0; i <= 256; ++i) {
        const double t = f.a() + (f.b() - f.a()) * i / 256.0;
        if ((f.eval(t) - h.eval(t)).norm() != 0.0) return false;
        if (i > 0 && (f.limit_left(t) - h.limit_left(t)).norm() != 0.0) return false;
        if (i < 256 && (f.limit_right(t) - h.limit_right(t)).norm() != 0.0) return false;
    }
    return true;
}

std::vector<double> jump_points(const PiecewiseFunction& f) {
    std::vector<double> out;
    for (const JumpRecord& r : jumps(f)) out.push_back(r.t);
    return out;
}

}  // namespace

TEST_CASE("realize examples") {
    const SequenceFamily pw = SequenceFamily::power();
    CHECK(same(realize(pw, 2), kst::vec1(Polynomial{0, 0, 1})));
    CHECK(realize(pw, 1000).eval(1.0).as_value()[0] == 1.0);
    CHECK(sup_norm(realize(pw, 1000)) == 1.0);

    const SequenceFamily sp = SequenceFamily::spike(0.0, 1.0, 0.0, 1.0);
    CHECK(same(realize(sp, 4), kst::vec_indicator({Interval::closed(0.0, 0.25)})));
    // Clipped at b.
    CHECK(same(realize(SequenceFamily::spike(0.0, 1.0, 0.75, 1.0), 1), kst::vec_indicator({Interval::closed(0.75, 1.0)})));

    const PiecewiseFunction fb =
        jordan_decompose(kst::vec_indicator({Interval::closed(0.25, 0.5), Interval::closed(0.75, 1.0)})).breaks;
    const SequenceFamily tr = SequenceFamily::truncation(fb, {0.25, 0.5, 0.75});
    CHECK(jump_points(realize(tr, 2)) == std::vector<double>{0.25, 0.5});
    CHECK(same(realize(tr, 3), fb));
    CHECK(tr.bound == 1.0);
    CHECK_THROWS_AS(realize(pw, 0), ArgumentError);
    CHECK_THROWS_AS(family_kind_from_string("geometric"), ArgumentError);
    CHECK(family_kind_from_string("custom-list") == FamilyKind::custom_list);
}

TEST_CASE("run_bounded_convergence examples") {
    const PiecewiseFunction Ft = kst::op1(Polynomial{0, 1});
    const auto ns = doubling(1024);

    const ConvergenceReport p = run_bounded_convergence(Ft, SequenceFamily::power(), ns, 1e-6);
    REQUIRE(p.entries.size() == ns.size());
    CHECK(p.integral_limit[0] == 0.0);
    for (std::size_t k = 0; k < ns.size(); ++k) {
        CHECK(p.entries[k].n == ns[k]);
        CHECK(std::abs(p.entries[k].error - 1.0 / static_cast<double>(ns[k] + 1)) <= 1e-12);
        if (k > 0) CHECK(p.entries[k].error < p.entries[k - 1].error);
    }
    CHECK_FALSE(p.passed);
    CHECK(p.sample_points == kSampleGridSize);

    const PiecewiseFunction F1 = kst::op_indicator({Interval::point(1.0)});
    const ConvergenceReport q = run_bounded_convergence(F1, SequenceFamily::power(), ns, 1e-6);
    CHECK(q.integral_limit[0] == 1.0);
    for (const ConvergenceEntry& e : q.entries) {
        CHECK(e.integral[0] == 1.0);
        CHECK(e.error == 0.0);
    }
    CHECK(q.passed);

    const ConvergenceReport s = run_bounded_convergence(Ft, SequenceFamily::spike(0.0, 1.0, 0.0, 5.0), ns, 1e-6);
    CHECK(s.integral_limit[0] == 0.0);
    for (const ConvergenceEntry& e : s.entries) CHECK(e.integral[0] == doctest::Approx(5.0 / e.n).epsilon(1e-14));
}

TEST_CASE("power family to 2^20 meets 1e-6 with error 1/(n+1)") {
    const auto ns = doubling(std::size_t{1} << 20);
    const ConvergenceReport p = run_bounded_convergence(kst::op1(Polynomial{0, 1}), SequenceFamily::power(), ns, 1e-6);
    for (const ConvergenceEntry& e : p.entries) REQUIRE(std::abs(e.error - 1.0 / static_cast<double>(e.n + 1)) <= 1e-12);
    CHECK(p.entries.back().error < 1e-6);
    CHECK(p.passed);
}

TEST_CASE("verify_break_limit") {
    const PiecewiseFunction gt = kst::vec1(Polynomial{0, 1});
    const PiecewiseFunction F = lincomb(1.0, kst::op_indicator({Interval::closed(0.25, 1.0)}), 2.0,
                                        kst::op_indicator({Interval::closed(0.75, 1.0)}));
    const BreakLimit r = verify_break_limit(F, gt);
    CHECK(r.sum_value[0] == 1.75);
    CHECK(r.engine_value[0] == 1.75);

    const BreakLimit c = verify_break_limit(kst::op1(Polynomial{1, 2, 3}), gt);
    CHECK(c.sum_value[0] == 0.0);
    CHECK(c.engine_value[0] == 0.0);
    const BreakLimit z = verify_break_limit(F, kst::vec1(Polynomial{}));
    CHECK(z.sum_value[0] == 0.0);
    CHECK(z.engine_value[0] == 0.0);

    Rng rng(81);
    for (int k = 0; k < 250; ++k) {
        const auto [a, b] = kst::corpus_domains()[k % 5];
        const std::size_t n = static_cast<std::size_t>(1 + k % 3);
        const PiecewiseFunction Fb = jordan_decompose(kst::random_function(rng, {Kind::op, n}, a, b)).breaks;
        const PiecewiseFunction g = kst::random_function(rng, {Kind::vector, n}, a, b);
        const BreakLimit x = verify_break_limit(Fb, g);
        REQUIRE((x.engine_value - x.sum_value).norm() <= 1e-12);
        // Independent sum over jump records.
        Value want(n);
        for (const JumpRecord& j : jumps(Fb))
            want = want + (j.jump_minus + j.jump_plus).as_operator() * g.eval(j.t).as_value();
        REQUIRE((x.sum_value - want).norm() <= 1e-12);
    }
}

TEST_CASE("built-in families converge against continuous and jumpy integrators") {
    const PiecewiseFunction cont = kst::op1(Polynomial{0, 0.5, 0.25});  // slope at most 1
    const PiecewiseFunction jumpy = jumpy_integrator();
    const auto ns = doubling(std::size_t{1} << 20);
    for (const PiecewiseFunction* F : {&cont, &jumpy}) {
        const ConvergenceReport p = run_bounded_convergence(*F, SequenceFamily::power(), ns, 1e-6);
        CHECK(p.passed);
        const ConvergenceReport s =
            run_bounded_convergence(*F, SequenceFamily::spike(0.0, 1.0, 0.25, 1.0), doubling(std::size_t{1} << 22), 1e-6);
        CHECK(s.passed);
        for (std::size_t k = 1; k < s.entries.size(); ++k) CHECK(s.entries[k].error <= s.entries[k - 1].error);
    }
    CHECK(run_bounded_convergence(cont, SequenceFamily::power(), ns, 1e-6).integral_limit[0] == 0.0);
    CHECK(run_bounded_convergence(jumpy, SequenceFamily::power(), ns, 1e-6).integral_limit[0] == -2.0);

    Rng rng(82);
    for (int k = 0; k < 40; ++k) {
        const auto [a, b] = kst::corpus_domains()[k % 5];
        const std::size_t n = static_cast<std::size_t>(1 + k % 3);
        const PiecewiseFunction F = kst::random_function(rng, {Kind::op, n}, a, b);
        const PiecewiseFunction fb = jordan_decompose(kst::random_function(rng, {Kind::vector, n}, a, b)).breaks;
        std::vector<double> order = jump_points(fb);
        std::shuffle(order.begin(), order.end(), rng);
        const ConvergenceReport r =
            run_bounded_convergence(F, SequenceFamily::truncation(fb, order), doubling(16), 1e-6);
        CHECK(r.passed);
        CHECK((r.integral_limit - ks_dFg(F, fb).value).norm() == 0.0);
    }
}

TEST_CASE("hypothesis violations are rejected before any integral") {
    const PiecewiseFunction Ft = kst::op1(Polynomial{0, 1});
    std::vector<PiecewiseFunction> members;
    for (int n = 1; n <= 4; ++n)
        members.push_back(PiecewiseFunction::constant(0.0, 1.0, Value{n == 3 ? 2.0 : 1.0 / n}));
    const std::vector<std::size_t> ns{1, 2, 3, 4};
    int calls = 0;
    ConvergenceOptions watch;
    watch.on_integral = [&calls](std::size_t) { ++calls; };

    const SequenceFamily too_big = SequenceFamily::custom(members, kst::vec1(Polynomial{}), 1.0);
    CHECK_THROWS_AS(run_bounded_convergence(Ft, too_big, ns, 1e-6, watch), HypothesisViolation);
    CHECK(calls == 0);

    // A spike whose declared bound is below its height.
    SequenceFamily spike = SequenceFamily::spike(0.0, 1.0, 0.5, 3.0);
    spike.bound = 2.0;
    CHECK_THROWS_AS(run_bounded_convergence(Ft, spike, ns, 1e-6, watch), HypothesisViolation);
    CHECK(calls == 0);

    // Bounded but not converging to the stated limit.
    std::vector<PiecewiseFunction> flat(4, PiecewiseFunction::constant(0.0, 1.0, Value{0.5}));
    const SequenceFamily wrong = SequenceFamily::custom(flat, kst::vec1(Polynomial{}), 1.0);
    CHECK_THROWS_AS(run_bounded_convergence(Ft, wrong, ns, 1e-6, watch), HypothesisViolation);
    CHECK(calls == 0);

    // A valid family calls the hook once per n plus once for the limit.
    const SequenceFamily ok = SequenceFamily::power();
    const ConvergenceReport r = run_bounded_convergence(Ft, ok, ns, 1e-6, watch);
    CHECK(calls == 5);
    CHECK(r.entries.size() == 4);
}

TEST_CASE("sample grid") {
    const std::vector<double> extra{0.25, 0.5};
    const std::vector<double> s = sample_grid(0.0, 1.0, extra);
    CHECK(s.size() == kSampleGridSize);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(s.front() == 0.0);
    CHECK(s.back() == 1.0);
    CHECK(std::binary_search(s.begin(), s.end(), 0.25));
    CHECK(std::binary_search(s.begin(), s.end(), 0.5));
}
