#include <doctest.h>

#include <random>

#include "channel.hpp"

using namespace catnoise;

TEST_CASE("validate_channel accepts well-formed channels") {
    PauliChannel id = validate_channel(1, 0, 0, 0);
    CHECK(id.pi0 == 1.0);

    PauliChannel mix = validate_channel(0.25, 0.25, 0.25, 0.25);
    CHECK(mix.pi0 == doctest::Approx(0.25));
}

TEST_CASE("validate_channel rejects bad inputs") {
    CHECK_THROWS_AS(validate_channel(0.5, 0.6, 0, 0), Error);
    try {
        validate_channel(0.5, 0.6, 0, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotNormalized);
    }
    try {
        validate_channel(-0.1, 0.6, 0.3, 0.2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeProbability);
    }
}

TEST_CASE("inputs within tolerance are renormalized") {
    PauliChannel ch = validate_channel(0.5 + 4e-13, 0.5, 0, 0);
    CHECK(ch.pi0 + ch.pi1 + ch.pi2 + ch.pi3 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_NOTHROW(validate_channel(0.3, -5e-13, 0.4, 0.3 + 5e-13));
}

TEST_CASE("derive_params matches the defining combinations") {
    SUBCASE("identity") {
        DerivedParams p = derive_params(validate_channel(1, 0, 0, 0));
        CHECK(p.a == 1.0);
        CHECK(p.b == 0.0);
        CHECK(p.c == 1.0);
        CHECK(p.d == 0.0);
    }
    SUBCASE("full dephasing") {
        DerivedParams p = derive_params(validate_channel(0.5, 0, 0, 0.5));
        CHECK(p.a == 1.0);
        CHECK(p.c == 0.0);
        CHECK(p.d == 0.0);
    }
    SUBCASE("mostly-identity depolarizing-like channel") {
        DerivedParams p = derive_params(validate_channel(0.9, 1.0 / 30, 1.0 / 30, 1.0 / 30));
        CHECK(p.a == doctest::Approx(28.0 / 30).epsilon(1e-14));
        CHECK(p.b == doctest::Approx(2.0 / 30).epsilon(1e-14));
        CHECK(p.c == doctest::Approx(26.0 / 30).epsilon(1e-14));
        CHECK(p.d == doctest::Approx(0.0));
    }
}

TEST_CASE("derived-parameter invariants hold for random channels") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 2000; ++i) {
        double e0 = -std::log(u(rng)), e1 = -std::log(u(rng));
        double e2 = -std::log(u(rng)), e3 = -std::log(u(rng));
        double s = e0 + e1 + e2 + e3;
        PauliChannel ch = validate_channel(e0 / s, e1 / s, e2 / s, 1 - e0 / s - e1 / s - e2 / s);
        DerivedParams p = derive_params(ch);
        CHECK(p.a >= 0);
        CHECK(p.b >= 0);
        CHECK(p.a + p.b == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(p.c) <= p.a + 1e-15);
        CHECK(std::abs(p.d) <= p.b + 1e-15);

        // (pi) <-> (a,b,c,d) round-trips
        PauliChannel back = channel_from_params(p);
        CHECK(back.pi0 == doctest::Approx(ch.pi0).epsilon(1e-15));
        CHECK(back.pi1 == doctest::Approx(ch.pi1).epsilon(1e-15));
        CHECK(back.pi2 == doctest::Approx(ch.pi2).epsilon(1e-15));
        CHECK(back.pi3 == doctest::Approx(ch.pi3).epsilon(1e-15));
    }
}

TEST_CASE("presets") {
    PauliChannel dep = preset("depolarizing", 1.0);
    CHECK(dep.pi0 == 1.0);
    CHECK(dep.pi1 == 0.0);

    PauliChannel deph = preset("dephasing", 0.7);
    CHECK(deph.pi0 == doctest::Approx(0.7));
    CHECK(deph.pi1 == 0.0);
    CHECK(deph.pi2 == 0.0);
    CHECK(deph.pi3 == doctest::Approx(0.3));

    PauliChannel dep04 = preset("depolarizing", 0.4);
    CHECK(dep04.pi1 == doctest::Approx(0.2).epsilon(1e-14));

    CHECK_THROWS_AS(preset("amplitude-damping", 0.5), Error);
    CHECK_THROWS_AS(preset("depolarizing", 1.5), Error);
    CHECK_THROWS_AS(preset("depolarizing", -0.1), Error);
}
