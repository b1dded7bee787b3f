#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "opradius/eigen.hpp"
#include "opradius/radius.hpp"
#include "oracles.hpp"

using namespace opradius;

namespace {
const CMatrix kNilpotent{{0.0, 1.0}, {0.0, 0.0}};
}

TEST_CASE("support function anchors") {
    for (double theta : {0.0, 0.4, 2.0, 5.5}) {
        CHECK(support_function(CMatrix::identity(3), theta) ==
              doctest::Approx(std::cos(theta)).epsilon(1e-11));
    }
    // H(0) = [[0, 1/2], [1/2, 0]] with eigenvalues +-1/2.
    CHECK(support_function(kNilpotent, 0.0) == doctest::Approx(0.5).epsilon(1e-11));

    const CMatrix h = oracles::random_hermitian(3, 42);
    CHECK(support_function(h, 0.0) == doctest::Approx(lambda_max(h)).epsilon(1e-10));
}

TEST_CASE("nilpotent anchor bracket") {
    const Bracket b = numerical_radius(kNilpotent, 1e-10);
    CHECK(b.certified);
    CHECK(b.method == BracketMethod::certified_scan);
    CHECK(b.contains(0.5));
    CHECK(b.width() <= 1e-10);
}

TEST_CASE("identity has radius one") {
    const Bracket b = numerical_radius(CMatrix::identity(3), 1e-9);
    CHECK(b.contains(1.0));
    CHECK(b.width() <= 1e-9);
}

TEST_CASE("antidiagonal closed form (a+b)/2") {
    const CMatrix m{{0.0, 2.0}, {1.0, 0.0}};
    const Bracket b = numerical_radius(m, 1e-9);
    CHECK(b.contains(1.5));
    // Sampling oracle approaches w from below.
    const double oracle = oracles::sampled_radius(m, 20000, 7);
    CHECK(oracle <= b.hi + 1e-12);
    CHECK(oracle >= 1.5 - 0.01);
}

TEST_CASE("zero matrix short-circuits") {
    const Bracket b = numerical_radius(CMatrix(3, 3), 1e-12);
    CHECK(b.lo == 0.0);
    CHECK(b.hi == 0.0);
    CHECK(b.method == BracketMethod::exact_rule);
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(numerical_radius(CMatrix(2, 3), 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(numerical_radius(CMatrix(2, 2), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(support_function(CMatrix(2, 3), 0.0), std::invalid_argument);
    Rng rng(1, 1);
    CHECK_THROWS_AS(rayleigh_lower_bound(CMatrix(2, 2), 0, rng), std::invalid_argument);
}

TEST_CASE("square-zero blocks certify instantly at the half norm") {
    // [[x, x], [-x, -x]] squares to zero, so its numerical range is the disk
    // of radius ||block||/2 = ||x||; the global bound closes the scan on the
    // initial grid.
    const CMatrix x = oracles::random_matrix(3, 3, 314);
    const CMatrix block = block2x2({x, x, -x, -x});
    const Bracket b = numerical_radius(block, 1e-9);
    CHECK(b.certified);
    CHECK(b.evals <= 70);
    CHECK(b.contains(spectral_norm(x)));
}

TEST_CASE("budget exhaustion yields a valid uncertified bracket") {
    const Bracket b = numerical_radius(kNilpotent, 1e-13, 500);
    CHECK_FALSE(b.certified);
    CHECK(b.method == BracketMethod::generic);
    CHECK(b.contains(0.5));
    CHECK(b.evals <= 500 + 2 * 64);
}

TEST_CASE("sandwich against the spectral norm") {
    for (int tc = 0; tc < 10; ++tc) {
        const int n = 1 + tc % 5;
        const CMatrix a = oracles::random_matrix(n, n, 1000 + tc);
        const Bracket b = numerical_radius(a, 1e-8);
        const double nrm = spectral_norm(a);
        CHECK(b.hi >= 0.5 * nrm - 1e-8);
        CHECK(b.lo <= nrm + 1e-10);
    }
}

TEST_CASE("unitary invariance of the bracket") {
    Rng rng(55, 0);
    for (int tc = 0; tc < 6; ++tc) {
        const int n = 2 + tc % 3;
        const CMatrix a = random_ginibre(n, rng);
        const CMatrix u = random_haar_unitary(n, rng);
        const Bracket ba = numerical_radius(a, 1e-8);
        const Bracket bu = numerical_radius(u.adjoint() * a * u, 1e-8);
        CHECK(ba.lo <= bu.hi + 1e-10);
        CHECK(bu.lo <= ba.hi + 1e-10);
    }
}

TEST_CASE("scaling homogeneity") {
    Rng rng(56, 0);
    const CMatrix a = random_ginibre(3, rng);
    const Bracket b = numerical_radius(a, 1e-9);
    for (double t : {0.25, 3.0}) {
        const Bracket bt = numerical_radius(a.scaled(t), 1e-9);
        CHECK(bt.lo <= t * b.hi + 1e-9 * (1.0 + t));
        CHECK(t * b.lo <= bt.hi + 1e-9 * (1.0 + t));
    }
}

TEST_CASE("adjoint symmetry") {
    Rng rng(57, 0);
    const CMatrix a = random_ginibre(4, rng);
    const Bracket b1 = numerical_radius(a, 1e-8);
    const Bracket b2 = numerical_radius(a.adjoint(), 1e-8);
    CHECK(b1.lo <= b2.hi + 1e-10);
    CHECK(b2.lo <= b1.hi + 1e-10);
}

TEST_CASE("direct sum takes the max") {
    Rng rng(58, 0);
    const CMatrix x = random_ginibre(2, rng);
    const CMatrix y = random_ginibre(3, rng);
    const Bracket bs = numerical_radius(direct_sum(x, y), 1e-8);
    const Bracket bx = numerical_radius(x, 1e-8);
    const Bracket by = numerical_radius(y, 1e-8);
    const double lo = std::max(bx.lo, by.lo);
    const double hi = std::max(bx.hi, by.hi);
    CHECK(bs.lo <= hi + 1e-10);
    CHECK(lo <= bs.hi + 1e-10);
}

TEST_CASE("Hermitian radius equals the spectral norm") {
    for (int tc = 0; tc < 6; ++tc) {
        const CMatrix h = oracles::random_hermitian(2 + tc % 4, 1200 + tc);
        const Bracket b = numerical_radius(h, 1e-9);
        CHECK(b.contains(spectral_norm(h)));
    }
}

TEST_CASE("rayleigh lower bound sits below the bracket") {
    Rng data(59, 0);
    for (int tc = 0; tc < 6; ++tc) {
        const CMatrix a = random_ginibre(2 + tc % 4, data);
        const Bracket b = numerical_radius(a, 1e-8);
        Rng rng(60, static_cast<std::uint64_t>(tc));
        CHECK(rayleigh_lower_bound(a, 2000, rng) <= b.hi + 1e-12);
    }
}

TEST_CASE("rayleigh anchors") {
    Rng rng(61, 0);
    CHECK(rayleigh_lower_bound(CMatrix(2, 2), 10, rng) == 0.0);
    CHECK(rayleigh_lower_bound(CMatrix::identity(3), 5, rng) == doctest::Approx(1.0).epsilon(1e-12));

    Rng rng2(62, 0);
    const double est = rayleigh_lower_bound(kNilpotent, 100000, rng2);
    CHECK(est >= 0.49);
    CHECK(est <= 0.5);
}
