#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace ks;
using kst::Rng;

TEST_CASE("basic algebra") {
    const Polynomial p{1, 2, 3};  // 1 + 2t + 3t^2
    CHECK(p(2.0) == 17.0);
    CHECK(p.derivative() == Polynomial{2, 6});
    CHECK(p.antiderivative() == Polynomial{0, 1, 1, 1});
    CHECK(p.integral(0.0, 1.0) == doctest::Approx(3.0));
    CHECK((p * Polynomial{0, 1}) == Polynomial{0, 1, 2, 3});
    CHECK((p - p).is_zero());
    CHECK(Polynomial{0, 0, 0}.is_zero());
    CHECK(Polynomial::monomial(3, 2.0) == Polynomial{0, 0, 0, 2});
}

TEST_CASE("long monomials evaluate without subnormal slowdown and match pow") {
    const Polynomial p = Polynomial::monomial(1 << 20);
    CHECK(p(0.5) == 0.0);
    CHECK(p(1.0) == 1.0);
    CHECK(p(0.9999999) == doctest::Approx(std::pow(0.9999999, 1 << 20)));
    for (int i = 0; i < 1000; ++i) (void)p(i / 1000.0);
    CHECK(max_abs(p, 0.0, 1.0) == 1.0);
    CHECK(sign_change_points(p - Polynomial::monomial(1 << 20), -1.0, 1.0).empty());
    CHECK(sign_change_points(Polynomial::monomial(101), -1.0, 1.0) == std::vector<double>{0.0});
}

TEST_CASE("sign changes bracket every sampled sign change (random cubics and quintics)") {
    Rng rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int c = 0; c < 500; ++c) {
        std::vector<double> co(static_cast<std::size_t>(kst::uniform_int(rng, 2, 6)));
        for (double& x : co) x = u(rng);
        const Polynomial p(co);
        std::vector<double> knots{-1.0};
        for (double r : sign_change_points(p, -1.0, 1.0)) knots.push_back(r);
        knots.push_back(1.0);
        // Between consecutive knots p keeps one sign (up to round-off at the knots).
        for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
            const double lo = knots[k], hi = knots[k + 1];
            int sign = 0;
            for (int s = 1; s < 50; ++s) {
                const double t = lo + (hi - lo) * s / 50.0;
                const double v = p(t);
                if (std::abs(v) < 1e-12) continue;
                const int sv = v > 0 ? 1 : -1;
                if (sign == 0) sign = sv;
                REQUIRE(sv == sign);
            }
        }
        // max_abs dominates dense sampling and is attained up to round-off.
        double sampled = 0.0;
        for (int s = 0; s <= 2000; ++s) sampled = std::max(sampled, std::abs(p(-1.0 + s / 1000.0)));
        const double m = max_abs(p, -1.0, 1.0);
        REQUIRE(m >= sampled - 1e-14);
        REQUIRE(m <= sampled + 1e-5);
    }
}
