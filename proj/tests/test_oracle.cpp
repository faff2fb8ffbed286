#include <doctest.h>

#include <cmath>
#include <random>

#include "cat_algebra.hpp"
#include "criteria.hpp"
#include "oracle.hpp"

using namespace catnoise;
using namespace catnoise::oracle;

namespace {

std::mt19937_64 g_rng(31);

PauliChannel random_channel() {
    std::uniform_real_distribution<double> u(0, 1);
    double e[4], s = 0;
    for (double& x : e) {
        x = -std::log(u(g_rng));
        s += x;
    }
    return validate_channel(e[0] / s, e[1] / s, e[2] / s, 1 - e[0] / s - e[1] / s - e[2] / s);
}

} // namespace

TEST_CASE("build_cat_state") {
    DenseState s = build_cat_state(2);
    CHECK(s.at(0, 0).real() == 0.5);
    CHECK(s.at(0, 3).real() == 0.5);
    CHECK(s.at(3, 0).real() == 0.5);
    CHECK(s.at(3, 3).real() == 0.5);
    CHECK(s.at(1, 1) == std::complex<double>(0, 0));
    CHECK(s.trace_real() == doctest::Approx(1.0));

    DenseState s3 = build_cat_state(3);
    CHECK(s3.at(0, 7).real() == 0.5);
    CHECK(s3.at(7, 7).real() == 0.5);

    // purity tr(rho^2) = 1
    double purity = 0;
    for (std::size_t i = 0; i < s3.dim(); ++i) {
        for (std::size_t j = 0; j < s3.dim(); ++j) {
            purity += std::norm(s3.at(i, j));
        }
    }
    CHECK(purity == doctest::Approx(1.0));

    CHECK_THROWS_AS(build_cat_state(11), Error);
    CHECK_THROWS_AS(build_cat_state(1), Error);
}

TEST_CASE("apply_channel") {
    SUBCASE("identity channel leaves the state alone") {
        DenseState s = build_cat_state(3);
        DenseState t = apply_channel(s, validate_channel(1, 0, 0, 0), 1);
        for (std::size_t i = 0; i < s.dim(); ++i) {
            for (std::size_t j = 0; j < s.dim(); ++j) {
                CHECK(std::abs(t.at(i, j) - s.at(i, j)) < 1e-15);
            }
        }
    }
    SUBCASE("full dephasing on both qubits kills the Bell coherences") {
        DenseState s = build_cat_state(2);
        PauliChannel deph = validate_channel(0.5, 0, 0, 0.5);
        s = apply_channel(s, deph, 0);
        s = apply_channel(s, deph, 1);
        CHECK(s.at(0, 0).real() == doctest::Approx(0.5));
        CHECK(s.at(3, 3).real() == doctest::Approx(0.5));
        CHECK(std::abs(s.at(0, 3)) < 1e-15);
        CHECK(std::abs(s.at(1, 1)) < 1e-15);
    }
    SUBCASE("single application scales the corner coherence by c") {
        PauliChannel ch = validate_channel(0.9, 1.0 / 30, 1.0 / 30, 1.0 / 30);
        DenseState s = apply_channel(build_cat_state(2), ch, 0);
        CHECK(s.at(0, 3).real() == doctest::Approx(13.0 / 30 / 1).epsilon(1e-14)); // c/2
    }
    SUBCASE("trace preserved, qubit range checked") {
        PauliChannel ch = random_channel();
        DenseState s = apply_channel(build_cat_state(4), ch, 3);
        CHECK(s.trace_real() == doctest::Approx(1.0).epsilon(1e-13));
        CHECK_THROWS_AS(apply_channel(s, ch, 4), Error);
        CHECK_THROWS_AS(apply_channel(s, ch, -1), Error);
    }
}

TEST_CASE("decohere_all: application order is irrelevant") {
    PauliChannel ch = random_channel();
    int n = 4;
    DenseState fwd = decohere_all(n, ch);
    DenseState rev = build_cat_state(n);
    for (int q = n - 1; q >= 0; --q) rev = apply_channel(rev, ch, q);
    for (std::size_t i = 0; i < fwd.dim(); ++i) {
        for (std::size_t j = 0; j < fwd.dim(); ++j) {
            CHECK(std::abs(fwd.at(i, j) - rev.at(i, j)) < 1e-13);
        }
    }
}

TEST_CASE("decohere_all special cases") {
    SUBCASE("full depolarizing gives the maximally mixed state") {
        DenseState s = decohere_all(2, validate_channel(0.25, 0.25, 0.25, 0.25));
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                double expect = (i == j) ? 0.25 : 0.0;
                CHECK(std::abs(s.at(i, j) - expect) < 1e-14);
            }
        }
    }
    SUBCASE("corner coherence is c^N / 2") {
        PauliChannel ch = validate_channel(0.9, 1.0 / 30, 1.0 / 30, 1.0 / 30);
        DenseState s = decohere_all(3, ch);
        double c = 26.0 / 30;
        CHECK(s.at(0, 7).real() == doctest::Approx(c * c * c / 2).epsilon(1e-14));
    }
    SUBCASE("entries stay real") {
        DenseState s = decohere_all(5, random_channel());
        CHECK(s.max_imag() < 1e-14);
        CHECK(s.max_hermiticity_violation() < 1e-12);
        CHECK(s.trace_real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(min_eigenvalue(s) >= -1e-10);
    }
}

TEST_CASE("partial_transpose") {
    SUBCASE("diagonal states are invariant") {
        DenseState s = decohere_all(2, validate_channel(0.25, 0.25, 0.25, 0.25));
        DenseState t = partial_transpose(s, 0b10);
        for (std::size_t i = 0; i < 4; ++i) CHECK(t.at(i, i).real() == doctest::Approx(0.25));
    }
    SUBCASE("Bell-state PT has eigenvalue -1/2") {
        DenseState t = partial_transpose(build_cat_state(2), 0b10);
        CHECK(min_eigenvalue(t) == doctest::Approx(-0.5).epsilon(1e-11));
    }
    SUBCASE("involution") {
        DenseState s = decohere_all(3, random_channel());
        DenseState t = partial_transpose(partial_transpose(s, 0b101), 0b101);
        for (std::size_t i = 0; i < s.dim(); ++i) {
            for (std::size_t j = 0; j < s.dim(); ++j) {
                CHECK(std::abs(s.at(i, j) - t.at(i, j)) < 1e-15);
            }
        }
    }
    SUBCASE("mask validation") {
        DenseState s = build_cat_state(2);
        CHECK_THROWS_AS(partial_transpose(s, 0), Error);
        CHECK_THROWS_AS(partial_transpose(s, 0b11), Error);
        CHECK_THROWS_AS(partial_transpose(s, 0b100), Error);
    }
}

TEST_CASE("min_eigenvalue") {
    DenseState d(2);
    d.at(0, 0) = 0.3;
    d.at(1, 1) = -0.2;
    d.at(2, 2) = 0.9;
    d.at(3, 3) = 0.1;
    CHECK(min_eigenvalue(d) == doctest::Approx(-0.2).epsilon(1e-12));

    d.at(0, 1) = {0.5, 0.1};
    d.at(1, 0) = {0.5, 0.3}; // not the conjugate
    CHECK_THROWS_AS(min_eigenvalue(d), Error);
}

TEST_CASE("cat-basis diagonality") {
    SUBCASE("identity channel: single unit entry") {
        DenseState s = decohere_all(4, validate_channel(1, 0, 0, 0));
        DiagonalityReport rep = verify_cat_diagonality(s);
        CHECK(rep.diagonal);
        CHECK(cat_pair_population(s, 0, +1) == doctest::Approx(1.0));
        CHECK(cat_pair_population(s, 0, -1) == doctest::Approx(0.0));
    }
    SUBCASE("random channels stay cat-diagonal") {
        for (int rep = 0; rep < 25; ++rep) {
            DenseState s = decohere_all(5, random_channel());
            CHECK(verify_cat_diagonality(s).max_off_diagonal < 1e-12);
        }
    }
}

TEST_CASE("oracle cat populations match the analytic coefficients") {
    for (int rep = 0; rep < 25; ++rep) {
        PauliChannel ch = random_channel();
        DerivedParams p = derive_params(ch);
        int n = 5;
        DenseState s = decohere_all(n, ch);
        for (int k = 0; k <= n / 2; ++k) {
            CatCoefficients cc = cat_populations(p, n, k);
            if (k == 0) {
                CHECK(cat_pair_population(s, 0, +1) == doctest::Approx(cc.alpha0_plus).epsilon(1e-12));
                CHECK(cat_pair_population(s, 0, -1) == doctest::Approx(cc.alpha0_minus).epsilon(1e-12));
            } else {
                CHECK(cat_pair_population(s, k, +1) == doctest::Approx(cc.alpha_k_plus).epsilon(1e-12));
                CHECK(cat_pair_population(s, k, -1) == doctest::Approx(cc.alpha_k_minus).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("oracle_cut_verdict") {
    SUBCASE("pure cat state is NPPT on every cut") {
        DenseState s = build_cat_state(4);
        PtResult r = oracle_cut_verdict(s, 2);
        CHECK(r.nppt);
        CHECK(r.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-10));
    }
    SUBCASE("a = b channel is PPT everywhere") {
        DenseState s = decohere_all(4, validate_channel(0.3, 0.3, 0.2, 0.2));
        CHECK(!oracle_cut_verdict(s, 1).nppt);
        CHECK(!oracle_cut_verdict(s, 2).nppt);
    }
    SUBCASE("worked channel agrees with the analytic verdict") {
        PauliChannel ch = validate_channel(0.9, 1.0 / 30, 1.0 / 30, 1.0 / 30);
        DenseState s = decohere_all(4, ch);
        PtResult r = oracle_cut_verdict(s, 2);
        CHECK(r.nppt);
    }
}

TEST_CASE("subset independence: all masks of the same size agree") {
    PauliChannel ch = random_channel();
    for (int n = 3; n <= 6; ++n) {
        DenseState s = decohere_all(n, ch);
        for (int k = 1; k <= n / 2; ++k) {
            int baseline = -1;
            std::uint64_t full = (std::uint64_t{1} << n) - 1;
            for (std::uint64_t mask = 1; mask < full; ++mask) {
                if (__builtin_popcountll(mask) != k) continue;
                double lam = min_eigenvalue(partial_transpose(s, mask));
                int verdict = lam < -kEigEpsilon ? 1 : 0;
                if (baseline < 0) baseline = verdict;
                CHECK(verdict == baseline);
            }
        }
    }
}
