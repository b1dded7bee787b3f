#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "opradius/checks.hpp"
#include "opradius/eigen.hpp"
#include "opradius/radius.hpp"
#include "oracles.hpp"

using namespace opradius;

namespace {

const CheckConfig kCfg{};

void expect_clean(const std::vector<CheckResult>& rows) {
    for (const CheckResult& r : rows) {
        INFO(r.check_id, "[", r.inequality_index, "] ", r.relation);
        CHECK(r.verdict != Verdict::violated);
        CHECK(r.margin >= -1e-7);
    }
}

} // namespace

TEST_CASE("all-zero inputs satisfy every check") {
    const CMatrix z(2, 2);
    Rng rng(1, 0);
    for (const CheckSpec& spec : catalog()) {
        CheckInputs in;
        in.mats.assign(spec.num_mats, z);
        in.scalars.assign(spec.num_scalars, CMatrix::identity(2));
        in.n = 2;
        in.d = 1;
        in.theta = 1.1;
        in.sign = -1;
        in.wmax_budget = 5;
        in.rng = rng;
        const std::vector<CheckResult> rows = spec.run(in, kCfg);
        CHECK(static_cast<int>(rows.size()) == spec.rows_per_invocation);
        for (const CheckResult& r : rows) {
            INFO(r.check_id, " ", r.relation);
            CHECK(r.verdict != Verdict::violated);
            CHECK(r.margin >= -1e-9);
        }
    }
}

TEST_CASE("C1 on the nilpotent anchor has margins 0 and 1/2") {
    const std::vector<CheckResult> rows = check_C1_sandwich(CMatrix{{0.0, 1.0}, {0.0, 0.0}}, kCfg);
    REQUIRE(rows.size() == 2);
    CHECK(std::abs(rows[0].margin) <= 1e-7);          // O/2 <= W is tight here
    CHECK(rows[0].verdict == Verdict::equality_witness);
    CHECK(rows[1].margin == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(rows[1].verdict == Verdict::consistent);
}

TEST_CASE("C1 upper bound is tight on Hermitian inputs") {
    const CMatrix h = oracles::random_hermitian(3, 77);
    const std::vector<CheckResult> rows = check_C1_sandwich(h, kCfg);
    CHECK(rows[1].verdict == Verdict::equality_witness);
}

TEST_CASE("C2 equality holds for embedded unitaries") {
    Rng rng(5, 0);
    const CMatrix x = random_ginibre(4, rng);
    const CMatrix u = random_haar_unitary(2, rng);
    const std::vector<CheckResult> rows = check_C2_unitary(x, u, 2, kCfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].verdict == Verdict::equality_witness);
}

TEST_CASE("C8 identities hold on random inputs") {
    Rng rng(6, 0);
    for (int tc = 0; tc < 3; ++tc) {
        const CMatrix x = random_ginibre(2, rng);
        const CMatrix y = random_ginibre(2, rng);
        const double theta = 2.0 * 3.14159265358979 * rng.uniform();
        const std::vector<CheckResult> rows = check_C8_identities(x, y, theta, kCfg);
        REQUIRE(rows.size() == 5);
        for (const CheckResult& r : rows) {
            INFO(r.relation);
            CHECK(r.verdict == Verdict::equality_witness);
        }
    }
}

TEST_CASE("C8(c) two-sided computation stays within 1e-7") {
    Rng rng(7, 0);
    const CMatrix x = random_ginibre(3, rng);
    const CMatrix y = random_ginibre(3, rng);
    const Bracket lhs = numerical_radius(block2x2({x, y, y, x}), 1e-8);
    const Bracket ws = numerical_radius(x + y, 1e-8);
    const Bracket wd = numerical_radius(x - y, 1e-8);
    const double rhs_lo = std::max(ws.lo, wd.lo);
    const double rhs_hi = std::max(ws.hi, wd.hi);
    CHECK(lhs.lo <= rhs_hi + 1e-7);
    CHECK(rhs_lo <= lhs.hi + 1e-7);
}

TEST_CASE("C9 with y = x is an equality witness and matches W(x)") {
    Rng rng(8, 0);
    const CMatrix x = random_ginibre(2, rng);
    const std::vector<CheckResult> rows = check_C9_main(x, x, kCfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].verdict == Verdict::equality_witness);
    CHECK(rows[1].verdict == Verdict::equality_witness);

    // Both sides collapse onto W(x).
    const Bracket wx = numerical_radius(x, 1e-8);
    CHECK(rows[0].rhs.lo <= wx.hi + 1e-7);
    CHECK(wx.lo <= rows[0].rhs.hi + 1e-7);
}

TEST_CASE("C3 lower bound is tight at y = 0 with nilpotent x") {
    const CMatrix x{{0.0, 1.0}, {0.0, 0.0}};
    const std::vector<CheckResult> rows = check_C3_offdiag_O(x, CMatrix(2, 2), kCfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].verdict == Verdict::equality_witness);
    CHECK(std::abs(rows[0].margin) <= 1e-7);
}

TEST_CASE("C16 with y = x reduces to the C17 identity") {
    Rng rng(9, 0);
    const CMatrix x = random_ginibre(2, rng);
    const Bracket wb = numerical_radius(block2x2({x, x, -x, -x}), 1e-8);
    const double ox = spectral_norm(x);
    CHECK(wb.lo <= ox + 1e-7);
    CHECK(ox <= wb.hi + 1e-7);

    const std::vector<CheckResult> c17 = check_C17_identity_O(x, kCfg);
    CHECK(c17[0].verdict == Verdict::equality_witness);
}

TEST_CASE("whole catalog runs clean on random inputs") {
    for (int tc = 0; tc < 3; ++tc) {
        Rng rng(100 + tc, 0);
        const int n = 1 + tc % 2;
        const int d = tc % 2 ? 1 : 2;
        const int size = n * d;
        for (const CheckSpec& spec : catalog()) {
            CheckInputs in;
            for (int i = 0; i < spec.num_mats; ++i) in.mats.push_back(random_ginibre(size, rng));
            for (int i = 0; i < spec.num_scalars; ++i) {
                in.scalars.push_back(spec.scalar_kind == ScalarKind::haar
                                         ? random_haar_unitary(n, rng)
                                         : random_ginibre(n, rng));
            }
            in.n = n;
            in.d = d;
            in.theta = 2.0 * rng.uniform();
            in.sign = tc % 2 ? -1 : +1;
            in.wmax_budget = 20;
            in.rng = rng;
            expect_clean(spec.run(in, kCfg));
        }
    }
}

TEST_CASE("scaling both inputs scales bracket endpoints") {
    Rng rng(11, 0);
    const CMatrix x = random_ginibre(2, rng);
    const CMatrix y = random_ginibre(2, rng);
    const double lam = 2.5;
    const std::vector<CheckResult> base = check_C9_main(x, y, kCfg);
    const std::vector<CheckResult> scaled = check_C9_main(x.scaled(lam), y.scaled(lam), kCfg);
    for (std::size_t i = 0; i < base.size(); ++i) {
        const double tol = kCfg.eps * (1.0 + lam) + 1e-9;
        CHECK(std::abs(scaled[i].lhs.lo - lam * base[i].lhs.lo) <= tol * (1.0 + std::abs(base[i].lhs.lo)));
        CHECK(std::abs(scaled[i].rhs.hi - lam * base[i].rhs.hi) <= tol * (1.0 + std::abs(base[i].rhs.hi)));
    }
}

TEST_CASE("wmax checks are flagged consistency-only") {
    Rng rng(12, 0);
    const CMatrix x1 = random_ginibre(2, rng);
    const CMatrix x2 = random_ginibre(2, rng);
    Rng search(13, 0);
    for (const auto& rows : {check_C13_wmax_sumdiff(x1, x2, 1, 2, 30, search, kCfg),
                             check_C14_wmax_offdiag(x1, x2, 1, 2, 30, search, kCfg)}) {
        REQUIRE(rows.size() == 2);
        for (const CheckResult& r : rows) {
            CHECK(r.consistency_only);
            CHECK(r.verdict != Verdict::violated);
            CHECK(r.verdict != Verdict::equality_witness);
        }
    }
}

TEST_CASE("dimension mismatches are rejected") {
    const CMatrix a(2, 2);
    const CMatrix b(3, 3);
    CHECK_THROWS_AS(check_C9_main(a, b, kCfg), std::invalid_argument);
    CHECK_THROWS_AS(check_C2_unitary(a, CMatrix::identity(2), 2, kCfg), std::invalid_argument);
}

TEST_CASE("catalog metadata is coherent") {
    CHECK(catalog().size() == 20);
    CHECK(find_check("C7") != nullptr);
    CHECK(find_check("C21") == nullptr);
    for (const CheckSpec& spec : catalog()) {
        CHECK(spec.num_mats >= 1);
        CHECK(spec.rows_per_invocation >= 1);
        if (spec.uses_sign) CHECK(spec.rows_per_trial() == 2 * spec.rows_per_invocation);
    }
}
