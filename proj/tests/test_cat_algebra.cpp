#include <doctest.h>

#include <cmath>
#include <random>

#include "cat_algebra.hpp"

using namespace catnoise;

namespace {

DerivedParams params(double a, double b, double c, double d) { return {a, b, c, d}; }

std::mt19937_64 g_rng(11);

DerivedParams random_params() {
    std::uniform_real_distribution<double> u(0, 1);
    double e[4], s = 0;
    for (double& x : e) {
        x = -std::log(u(g_rng));
        s += x;
    }
    PauliChannel ch = validate_channel(e[0] / s, e[1] / s, e[2] / s,
                                       1 - e[0] / s - e[1] / s - e[2] / s);
    return derive_params(ch);
}

} // namespace

TEST_CASE("delta: identity channel") {
    CHECK(delta(params(1, 0, 1, 0), 5) == 1.0);
}

TEST_CASE("delta: opposite-sign c,d picks the parity branch") {
    DerivedParams p = params(0.9, 0.1, 0.85, -0.05);
    // odd N: |c|^3 - |d|^3
    CHECK(delta(p, 3) == doctest::Approx(0.614000).epsilon(1e-12));
    // even N: |c|^2 + |d|^2
    CHECK(delta(p, 2) == doctest::Approx(0.7250).epsilon(1e-12));
}

TEST_CASE("delta: cancellation-safe near |c| = |d|") {
    double c = 0.5 + 1e-13, d = -0.5;
    DerivedParams p = params(0.5 + 1e-13, 0.5 - 1e-13, c, d);
    // the long double reference itself loses ~7 digits to cancellation here
    long double expected = std::pow((long double)c, 3) + std::pow((long double)d, 3);
    double got = delta(p, 3);
    CHECK(got == doctest::Approx((double)expected).epsilon(1e-4));
    CHECK(got > 0.0);

    // exact cancellation
    DerivedParams q = params(0.6, 0.4, 0.5, -0.5);
    CHECK(delta(q, 3) == 0.0);
    CHECK(delta_log(q, 3).sign == 0);
    CHECK(delta(q, 4) == doctest::Approx(2 * std::pow(0.5, 4)));
}

TEST_CASE("two_lambda basics") {
    CHECK(two_lambda(params(1, 0, 1, 0), CutSpec(6, 3)) == 0.0);
    CHECK(two_lambda_log(params(1, 0, 1, 0), CutSpec(6, 3)).sign == 0);
    CHECK(two_lambda(params(0.5, 0.5, 0, 0), CutSpec(4, 2)) == doctest::Approx(0.125));
    double a = 28.0 / 30, b = 2.0 / 30;
    CHECK(two_lambda(params(a, b, 26.0 / 30, 0), CutSpec(4, 2)) ==
          doctest::Approx(2 * a * a * b * b).epsilon(1e-13));
}

TEST_CASE("log-domain and linear evaluation agree for moderate N") {
    for (int rep = 0; rep < 200; ++rep) {
        DerivedParams p = random_params();
        std::uniform_int_distribution<std::int64_t> nd(2, 300);
        std::int64_t n = nd(g_rng);
        std::int64_t k = std::uniform_int_distribution<std::int64_t>(1, n / 2)(g_rng);

        // reference: direct long double power sums
        auto lpow = [](double x, std::int64_t e) { return std::pow((long double)x, (long double)e); };
        long double dl = std::abs(lpow(p.c, n) + lpow(p.d, n));
        long double tl = lpow(p.a, k) * lpow(p.b, n - k) + lpow(p.b, k) * lpow(p.a, n - k);

        double dv = delta(p, n);
        double tv = two_lambda(p, CutSpec(n, k));
        if (dl > 1e-280) CHECK(dv == doctest::Approx((double)dl).epsilon(1e-9));
        if (tl > 1e-280) CHECK(tv == doctest::Approx((double)tl).epsilon(1e-9));
    }
}

TEST_CASE("log domain survives N = 10^6") {
    DerivedParams p = params(0.93333, 0.06667, 0.86667, 0.0);
    LogValue d = delta_log(p, 1000000);
    LogValue l = two_lambda_log(p, CutSpec(1000000, 250000));
    CHECK(d.sign == 1);
    CHECK(std::isfinite(d.log_magnitude));
    CHECK(l.sign == 1);
    CHECK(std::isfinite(l.log_magnitude));
}

TEST_CASE("cat_populations") {
    SUBCASE("identity channel keeps the pure state") {
        CatCoefficients cc = cat_populations(params(1, 0, 1, 0), 3, 0);
        CHECK(cc.alpha0_plus == doctest::Approx(1.0));
        CHECK(cc.alpha0_minus == doctest::Approx(0.0));
    }
    SUBCASE("fully mixed coherences") {
        // a = b = 1/2, c = d = 0 is the maximally mixed state: every cat
        // state carries 1/4
        CatCoefficients cc = cat_populations(params(0.5, 0.5, 0, 0), 2, 1);
        CHECK(cc.alpha_k_plus == doctest::Approx(0.25));
        CHECK(cc.alpha_k_minus == doctest::Approx(0.25));
    }
    SUBCASE("worked example at N = 3, k = 1") {
        CatCoefficients cc = cat_populations(params(0.7, 0.3, 0.5, 0.2), 3, 1);
        CHECK(cc.alpha_k_plus == doctest::Approx(0.140).epsilon(1e-12));
        CHECK(cc.alpha_k_minus == doctest::Approx(0.070).epsilon(1e-12));
        CHECK(cc.alpha_k_plus + cc.alpha_k_minus == doctest::Approx(cc.two_lambda).epsilon(1e-12));
    }
    SUBCASE("populations are nonnegative") {
        for (int rep = 0; rep < 500; ++rep) {
            DerivedParams p = random_params();
            std::int64_t n = std::uniform_int_distribution<std::int64_t>(2, 40)(g_rng);
            for (std::int64_t k = 0; k <= n / 2; ++k) {
                CatCoefficients cc = cat_populations(p, n, k);
                CHECK(cc.alpha0_plus >= -1e-12);
                CHECK(cc.alpha0_minus >= -1e-12);
                CHECK(cc.alpha_k_plus >= -1e-12);
                CHECK(cc.alpha_k_minus >= -1e-12);
            }
        }
    }
}

TEST_CASE("trace identity: populations sum to 1 via pair counting") {
    for (int rep = 0; rep < 100; ++rep) {
        DerivedParams p = random_params();
        std::int64_t n = std::uniform_int_distribution<std::int64_t>(2, 30)(g_rng);
        CatCoefficients c0 = cat_populations(p, n, 0);
        double total = c0.alpha0_plus + c0.alpha0_minus;
        for (std::int64_t k = 1; k <= n / 2; ++k) {
            CatCoefficients ck = cat_populations(p, n, k);
            double pairs = count_k_group(n, k) / 2.0;
            total += pairs * (ck.alpha_k_plus + ck.alpha_k_minus);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("count_k_group") {
    CHECK(count_k_group(4, 1) == 8);
    CHECK(count_k_group(4, 2) == 6);
    CHECK(count_k_group(5, 2) == 20);
    CHECK_THROWS_AS(count_k_group(4, 3), Error);
    CHECK_THROWS_AS(count_k_group(4, 0), Error);
}

TEST_CASE("CutSpec validation") {
    CHECK_THROWS_AS(CutSpec(1, 1), Error);
    CHECK_THROWS_AS(CutSpec(4, 0), Error);
    CHECK_THROWS_AS(CutSpec(4, 3), Error);
    CHECK(CutSpec(8, 2).alpha() == doctest::Approx(0.25));
}
