#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ks/variation.hpp"
#include "support.hpp"

using namespace ks;
using kst::Rng;

namespace {

PiecewiseFunction hat() {
    Piece up{Polynomial{0, 2}};
    Piece down{Polynomial{2, -2}};
    return PiecewiseFunction({Kind::vector, 1}, {0.0, 0.5, 1.0}, {up, down}, {Value{0.0}, Value{1.0}, Value{0.0}});
}

const PiecewiseFunction kId = kst::vec1(Polynomial{0, 1});
const PiecewiseFunction kStep = kst::vec_indicator({Interval::closed(0.5, 1.0)});

/// Dense division of [c, d] through every grid point, with points a tiny
/// step on either side so one-sided jumps are seen.
std::vector<double> dense_division(const PiecewiseFunction& f, double c, double d, int depth) {
    std::vector<double> pts;
    const int n = 1 << depth;
    for (int i = 0; i <= n; ++i) pts.push_back(c + (d - c) * i / n);
    for (double t : f.grid()) {
        if (t < c || t > d) continue;
        pts.push_back(t);
        const double eps = 1e-11 * (f.b() - f.a());
        if (t - eps > c) pts.push_back(t - eps);
        if (t + eps < d) pts.push_back(t + eps);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

TEST_CASE("var_compact examples") {
    CHECK(var_compact(kId, 0.0, 1.0).total == 1.0);
    const VariationResult s = var_compact(kStep, 0.0, 1.0);
    CHECK(s.total == 1.0);
    CHECK(s.jump_contribution == 1.0);
    CHECK(s.continuous_contribution == 0.0);
    // Hat: the supremum over dyadic divisions of depth 12.
    std::vector<double> dyadic;
    for (int i = 0; i <= 4096; ++i) dyadic.push_back(i / 4096.0);
    const double brute = kst::division_sum(hat(), dyadic);
    CHECK(brute == 2.0);
    CHECK(var_compact(hat(), 0.0, 1.0).total == doctest::Approx(brute).epsilon(1e-15));
    CHECK(var_compact(kId, 0.3, 0.3).total == 0.0);
    CHECK_THROWS_AS(var_compact(kId, -0.5, 0.5), DomainError);
}

TEST_CASE("var_interval examples") {
    CHECK(var_interval(kStep, Interval::closed_open(0.0, 0.5)).total == 0.0);
    // Brute force: generalized divisions with points < 1/2 see nothing.
    Rng rng(41);
    for (int c = 0; c < 50; ++c) {
        const auto pts = kst::random_division(rng, Interval::closed_open(0.0, 0.5));
        CHECK(kst::division_sum(kStep, pts) == 0.0);
    }
    const double closed = var_interval(kStep, Interval::closed(0.0, 0.5)).total;
    CHECK(closed == 1.0);
    CHECK(closed == var_interval(kStep, Interval::closed_open(0.0, 0.5)).total + 1.0);
    const PiecewiseFunction sq = kst::vec1(Polynomial{0, 0, 1});
    CHECK(var_interval(sq, Interval::open(0.0, 1.0)).total == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(var_interval(sq, Interval::point(0.5)).total == 0.0);
}

TEST_CASE("var_elementary examples") {
    CHECK(var_elementary(kId, ElementarySet{}).total == 0.0);
    const ElementarySet e{Interval::closed(0.0, 0.25), Interval::closed(0.5, 0.75)};
    CHECK(var_elementary(hat(), e).total == doctest::Approx(1.0).epsilon(1e-15));
    const ElementarySet ends{Interval::closed(0.0, 0.25), Interval::closed(0.75, 1.0)};
    CHECK(var_elementary(kId, ends).total == 0.5);
    CHECK(var_elementary(kId, ends).total <= var_compact(kId, 0.0, 1.0).total);
}

TEST_CASE("contracting_variation examples") {
    std::vector<ElementarySet> a;
    for (int n = 1; n <= 5; ++n) a.push_back({Interval::open(0.0, 1.0 / n)});
    const auto v = contracting_variation(kId, a);
    for (int n = 1; n <= 5; ++n) CHECK(v[n - 1] == doctest::Approx(1.0 / n).epsilon(1e-15));

    const auto z = contracting_variation(PiecewiseFunction::constant(0.0, 1.0, Value{2.0}), a);
    for (double x : z) CHECK(x == 0.0);

    std::vector<ElementarySet> h;
    for (int n = 1; n <= 1000; ++n) h.push_back({Interval::closed(0.5 - 0.25 / n, 0.5 + 0.25 / n)});
    const auto vh = contracting_variation(hat(), h);
    for (int n = 1; n <= 1000; ++n) {
        CHECK(vh[n - 1] == doctest::Approx(1.0 / n).epsilon(1e-12));
        if (n > 1) CHECK(vh[n - 1] <= vh[n - 2]);
    }
    CHECK(vh.back() < 1e-2);

    std::vector<ElementarySet> growing{{Interval::closed(0.0, 0.25)}, {Interval::closed(0.0, 0.5)}};
    CHECK_THROWS_AS(contracting_variation(kId, growing), ArgumentError);
    CHECK_THROWS_AS(contracting_variation(kStep, a), ArgumentError);
}

TEST_CASE("variation properties on the random corpus") {
    Rng rng(42);
    for (int c = 0; c < 500; ++c) {
        const auto [a, b] = kst::corpus_domains()[c % 5];
        const Codomain cd{c % 2 ? Kind::op : Kind::vector, static_cast<std::size_t>(1 + c % 3)};
        const PiecewiseFunction f = kst::random_function(rng, cd, a, b);

        int i = kst::uniform_int(rng, 0, 16), k = kst::uniform_int(rng, 0, 16);
        if (i > k) std::swap(i, k);
        const double cc = kst::lattice(a, b, i), dd = kst::lattice(a, b, k);
        const VariationResult r = var_compact(f, cc, dd);
        REQUIRE(std::abs(r.total - r.continuous_contribution - r.jump_contribution) <= 1e-12);
        REQUIRE(r.continuous_contribution >= 0.0);
        REQUIRE(r.jump_contribution >= 0.0);

        // Additivity of the Jordan variation.
        const int mid = kst::uniform_int(rng, i, k);
        const double m = kst::lattice(a, b, mid);
        REQUIRE(std::abs(var_compact(f, cc, dd).total - var_compact(f, cc, m).total - var_compact(f, m, dd).total) <=
                1e-10);

        if (cc < dd) {
            // Relating identities: compact = variant + the excluded endpoint jumps.
            auto jm = [&](double t) { return t > a ? (f.eval(t) - f.limit_left(t)).norm() : 0.0; };
            auto jp = [&](double t) { return t < b ? (f.limit_right(t) - f.eval(t)).norm() : 0.0; };
            const double co = var_interval(f, Interval::closed_open(cc, dd)).total;
            const double oc = var_interval(f, Interval::open_closed(cc, dd)).total;
            const double oo = var_interval(f, Interval::open(cc, dd)).total;
            REQUIRE(std::abs(r.total - (co + jm(dd))) <= 1e-10);
            REQUIRE(std::abs(r.total - (oc + jp(cc))) <= 1e-10);
            REQUIRE(std::abs(r.total - (oo + jp(cc) + jm(dd))) <= 1e-10);

            // Lower-bound consistency on sampled generalized divisions.
            for (const Interval& j : {Interval::closed(cc, dd), Interval::closed_open(cc, dd),
                                      Interval::open_closed(cc, dd), Interval::open(cc, dd)}) {
                const double v = var_interval(f, j).total;
                for (int s = 0; s < 4; ++s) REQUIRE(kst::division_sum(f, kst::random_division(rng, j)) <= v + 1e-10);
                // Monotonicity under inclusion.
                REQUIRE(var_interval(f, Interval::open(cc, dd)).total <= v + 1e-12);
                REQUIRE(v <= r.total + 1e-12);
            }
        }

        // A dense division approaches the computed value from below.
        const double brute = kst::division_sum(f, dense_division(f, a, b, 13));
        const double full = var_compact(f, a, b).total;
        REQUIRE(brute <= full + 1e-10);
        REQUIRE(brute >= full - 1e-4 * std::max(1.0, full));
    }
}

TEST_CASE("finitely additive measure for continuous f") {
    Rng rng(43);
    kst::CorpusOptions opt;
    opt.max_jumps = 0;
    for (int c = 0; c < 500; ++c) {
        const PiecewiseFunction f = kst::random_function(rng, {Kind::vector, 2}, 0.0, 1.0, opt);
        REQUIRE(is_continuous(f));
        const ElementarySet e1 = kst::random_elementary(rng, 0.0, 1.0);
        const ElementarySet e2 = elementary_diff(kst::random_elementary(rng, 0.0, 1.0), e1);
        const double lhs = var_elementary(f, elementary_union(e1, e2)).total;
        REQUIRE(std::abs(lhs - var_elementary(f, e1).total - var_elementary(f, e2).total) <= 1e-10);
        REQUIRE(lhs <= var_compact(f, 0.0, 1.0).total + 1e-12);
    }
}

TEST_CASE("pure break functions: variation is the sum of jump norms") {
    Rng rng(44);
    for (int c = 0; c < 300; ++c) {
        const PiecewiseFunction f = kst::random_function(rng, {Kind::op, 2}, -1.0, 1.0);
        const PiecewiseFunction fb = jordan_decompose(f).breaks;
        double want = 0.0;
        for (const JumpRecord& r : jumps(fb)) want += r.jump_minus.norm() + r.jump_plus.norm();
        const VariationResult v = var_compact(fb, -1.0, 1.0);
        REQUIRE(v.total == want);
        REQUIRE(v.continuous_contribution == 0.0);
    }
}
