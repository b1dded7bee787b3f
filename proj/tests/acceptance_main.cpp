// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria pin every tolerance in code; nothing is configurable.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "opradius/campaign.hpp"
#include "opradius/cli.hpp"
#include "opradius/eigen.hpp"
#include "opradius/matrix_io.hpp"
#include "opradius/radius.hpp"
#include "opradius/wmax.hpp"
#include "oracles.hpp"

using namespace opradius;

namespace {

int g_failures = 0;

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void report(int id, bool pass, const std::string& name, const std::string& detail, double secs) {
    std::printf("ACCEPTANCE %2d %s  %-34s %s [%.1fs]\n", id, pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

struct CoutCapture {
    std::stringstream buffer;
    std::streambuf* old;
    CoutCapture() : old(std::cout.rdbuf(buffer.rdbuf())) {}
    ~CoutCapture() { std::cout.rdbuf(old); }
};

// 1. The known nilpotent anchor through the CLI radius surface.
void criterion_1() {
    const double t0 = now_seconds();
    const std::string path = "/tmp/opradius_acc_nilpotent.json";
    save_matrix(path, CMatrix{{0.0, 1.0}, {0.0, 0.0}});
    Bracket b;
    int rc = 1;
    {
        CoutCapture cap;
        rc = run_cli({"radius", "--input", path, "--eps", "1e-10"});
        if (rc == 0) b = bracket_from_json(Json::parse(cap.buffer.str()));
    }
    std::remove(path.c_str());
    const double secs = now_seconds() - t0;
    const bool pass = rc == 0 && b.contains(0.5) && b.width() <= 1e-10 && b.certified && secs <= 1.0;
    report(1, pass, "anchor radius 1/2",
           fmt("lo=%.12f hi=%.12f width=%.2e evals=%ld", b.lo, b.hi, b.width(), b.evals), secs);
}

// 2. Closed-form family w([[0,a],[b,0]]) = (a+b)/2, Rayleigh cross-check.
void criterion_2() {
    const double t0 = now_seconds();
    Rng rng(1202, 0);
    bool pass = true;
    std::string detail = "50 pairs ok";
    for (int k = 0; k < 50 && pass; ++k) {
        const double a = 3.0 * rng.uniform();
        const double bb = 3.0 * rng.uniform();
        const CMatrix m{{0.0, a}, {bb, 0.0}};
        const Bracket br = numerical_radius(m, 1e-8);
        Rng sampler(77, static_cast<std::uint64_t>(k));
        const double oracle = rayleigh_lower_bound(m, 100000, sampler);
        if (!br.contains(0.5 * (a + bb)) || oracle > br.hi + 1e-12) {
            pass = false;
            detail = fmt("failed at a=%.4f b=%.4f lo=%.10f hi=%.10f oracle=%.10f", a, bb, br.lo,
                         br.hi, oracle);
        }
    }
    const double secs = now_seconds() - t0;
    report(2, pass && secs <= 30.0, "closed-form antidiagonal family", detail, secs);
}

// 3. Sandwich suite on pure Ginibre draws across block sizes.
void criterion_3() {
    const double t0 = now_seconds();
    CheckConfig cfg; // violation tolerance 1e-7
    long violations = 0;
    long rows = 0;
    for (int d : {1, 2, 3, 4, 6, 8}) {
        Rng rng(1303, static_cast<std::uint64_t>(d));
        for (int k = 0; k < 500; ++k) {
            const CMatrix x = random_ginibre(d, rng);
            for (const CheckResult& r : check_C1_sandwich(x, cfg)) {
                ++rows;
                if (r.verdict == Verdict::violated) ++violations;
            }
        }
    }
    report(3, violations == 0, "sandwich suite",
           fmt("%ld rows, %ld violations (d in {1,2,3,4,6,8})", rows, violations),
           now_seconds() - t0);
}

// 4. Identity suite: every equality check lands inside 1e-7.
void criterion_4() {
    const double t0 = now_seconds();
    bool pass = true;
    std::string detail;
    long witnessed = 0, rows = 0;
    for (int d : {1, 2, 3}) {
        CampaignConfig cfg;
        cfg.suites = {"C2", "C8", "C17"};
        cfg.trials = 200;
        cfg.d = d;
        cfg.n = 1;
        cfg.seed = 1404 + d;
        const Report r = run_campaign(cfg);
        for (const CheckAggregate& a : r.checks) {
            rows += a.rows;
            witnessed += a.equality_witnesses;
            if (a.violations != 0 || a.equality_witnesses != a.rows) pass = false;
        }
    }
    detail = fmt("%ld/%ld equality rows witnessed at 1e-7", witnessed, rows);
    report(4, pass, "identity suite", detail, now_seconds() - t0);
}

// 5. Full campaign across the catalog, two dimension configurations.
void criterion_5() {
    const double t0 = now_seconds();
    long violations = 0;
    bool ok = true;
    for (const auto& [d, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}}) {
        const std::string out = fmt("/tmp/opradius_acc_verify_d%d_n%d.json", d, n);
        CoutCapture cap;
        const int rc = run_cli({"verify", "--suite", "all", "--trials", "500", "--dim",
                                std::to_string(d), "--block", std::to_string(n), "--seed", "1505",
                                "--out", out});
        ok = ok && rc == 0;
        const Report r = load_report(out);
        violations += r.total_violations();
        std::remove(out.c_str());
    }
    const double secs = now_seconds() - t0;
    report(5, ok && violations == 0 && secs <= 900.0, "full inequality campaign",
           fmt("violations=%ld across C1-C20 at (d=2,n=1) and (d=3,n=2)", violations), secs);
}

// 6. Tightness witnesses.
void criterion_6() {
    const double t0 = now_seconds();
    CheckConfig cfg;
    Rng rng(1606, 0);
    long witness = 0;
    const int trials = 200;
    for (int k = 0; k < trials; ++k) {
        const CMatrix x = random_ginibre(2, rng);
        const std::vector<CheckResult> rows = check_C9_main(x, x, cfg);
        bool both = true;
        for (const CheckResult& r : rows) both = both && r.verdict == Verdict::equality_witness;
        if (both) ++witness;
    }
    const double rate = static_cast<double>(witness) / trials;

    bool c16_ok = true;
    Rng rng2(1607, 0);
    for (int k = 0; k < trials && c16_ok; ++k) {
        const CMatrix x = random_ginibre(2, rng2);
        const Bracket wb = numerical_radius(block2x2({x, x, -x, -x}), cfg.eps);
        const double ox = spectral_norm(x);
        c16_ok = wb.lo <= ox + 1e-7 && ox <= wb.hi + 1e-7;
    }
    report(6, rate >= 0.95 && c16_ok, "tightness witnesses",
           fmt("C9(y=x) witness rate %.1f%%, C16(y=x)->C17 identity %s", 100.0 * rate,
               c16_ok ? "holds" : "fails"),
           now_seconds() - t0);
}

// 7. W_max brackets: exact at level one, sandwiched at level two, and
//    consistency checks free of contradictions.
void criterion_7() {
    const double t0 = now_seconds();
    bool pass = true;
    std::string detail = "level rules + 200 consistency trials clean";

    Rng rng(1708, 0);
    for (int k = 0; k < 50 && pass; ++k) {
        const int d = 1 + static_cast<int>(rng.below(4));
        const CMatrix x = random_ginibre(d, rng);
        const Bracket b = wmax_bracket(x, 1, d, 50, rng);
        const double nx = spectral_norm(x);
        if (b.width() > 1e-9 || std::abs(b.lo - nx) > 1e-9) {
            pass = false;
            detail = fmt("level-1 exact rule failed at trial %d", k);
        }
    }
    for (int k = 0; k < 50 && pass; ++k) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const CMatrix x = random_ginibre(2 * d, rng);
        const Bracket b = wmax_bracket(x, 2, d, 100, rng);
        const double nx = spectral_norm(x);
        if (b.lo < 0.5 * nx - 1e-9 || b.hi > nx + 1e-9 || b.lo > b.hi) {
            pass = false;
            detail = fmt("level-2 sandwich failed at trial %d", k);
        }
    }
    if (pass) {
        CampaignConfig cfg;
        cfg.suites = {"C13", "C14"};
        cfg.trials = 200;
        cfg.d = 2;
        cfg.n = 1;
        cfg.seed = 1709;
        cfg.wmax_budget = 100;
        const Report r = run_campaign(cfg);
        if (r.total_violations() != 0) {
            pass = false;
            detail = fmt("%ld consistency contradictions", r.total_violations());
        }
    }
    report(7, pass, "wmax bracket guarantees", detail, now_seconds() - t0);
}

// 8. The 4-block proof factorization reconstructs and respects the chain.
void criterion_8() {
    const double t0 = now_seconds();
    bool pass = true;
    std::string detail = "200 pairs reconstructed to 1e-9";
    Rng rng(1808, 0);
    for (int k = 0; k < 200 && pass; ++k) {
        const int n = 1 + static_cast<int>(rng.below(2));
        const int d = 1 + static_cast<int>(rng.below(2));
        const CMatrix x1 = random_ginibre(n * d, rng);
        const CMatrix x2 = random_ginibre(n * d, rng);
        const WmaxSearch s1 = wmax_search(x1, n, d, 20, rng);
        const WmaxSearch s2 = wmax_search(x2, n, d, 20, rng);
        try {
            // Reconstruction to 1e-9 is asserted inside; a failure throws.
            const double bound = sumdiff_wmax_upper(s1.best, x1, s2.best, x2);
            const double u1 = wmax_upper(s1.best, x1);
            const double u2 = wmax_upper(s2.best, x2);
            if (bound > u1 + u2 + 1e-9) {
                pass = false;
                detail = fmt("chain broke at pair %d: %.12f > %.12f", k, bound, u1 + u2);
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = fmt("pair %d: %s", k, e.what());
        }
    }
    report(8, pass, "proof-construction verifier", detail, now_seconds() - t0);
}

// 9. Oracle containment for the radius and the spectral norm.
void criterion_9() {
    const double t0 = now_seconds();
    bool pass = true;
    std::string detail = "500 matrices within oracle bounds";
    for (int k = 0; k < 500 && pass; ++k) {
        const int d = 1 + k % 6;
        const CMatrix a = oracles::random_matrix(d, d, 1900 + k);
        const Bracket b = numerical_radius(a, 1e-8);
        Rng sampler(1901, static_cast<std::uint64_t>(k));
        const double ray = rayleigh_lower_bound(a, 10000, sampler);
        if (ray > b.hi + 1e-12) {
            pass = false;
            detail = fmt("rayleigh exceeded bracket at %d: %.14f > %.14f", k, ray, b.hi);
        }
        const double pw = oracles::power_iteration_norm(a, 10000, 1902 + k);
        if (std::abs(spectral_norm(a) - pw) > 1e-8 * (1.0 + pw)) {
            pass = false;
            detail = fmt("norm drifted from power iteration at %d", k);
        }
    }
    report(9, pass, "oracle containment", detail, now_seconds() - t0);
}

// 10. Determinism of the verify surface.
void criterion_10() {
    const double t0 = now_seconds();
    const std::string out1 = "/tmp/opradius_acc_det1.json";
    const std::string out2 = "/tmp/opradius_acc_det2.json";
    const std::vector<std::string> args{"verify", "--suite", "C1,C5,C8,C13", "--trials", "10",
                                        "--dim", "2",  "--block", "1",       "--seed",   "2020",
                                        "--eps", "1e-8"};
    int rc1, rc2;
    {
        CoutCapture cap;
        auto a1 = args;
        a1.insert(a1.end(), {"--out", out1});
        rc1 = run_cli(a1);
        auto a2 = args;
        a2.insert(a2.end(), {"--out", out2});
        rc2 = run_cli(a2);
    }
    Report r1 = load_report(out1);
    Report r2 = load_report(out2);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    r1.wall_time_seconds = 0.0;
    r2.wall_time_seconds = 0.0;
    // The out_path differs by construction; normalize it away too.
    r1.config.out_path = "";
    r2.config.out_path = "";
    const bool pass =
        rc1 == 0 && rc2 == 0 && report_to_json(r1).dump() == report_to_json(r2).dump();
    report(10, pass, "verify determinism", pass ? "byte-identical modulo wall time" : "reports differ",
           now_seconds() - t0);
}

} // namespace

int main(int argc, char** argv) {
    // Optional filter: run only the listed criteria, e.g. "./acceptance 1 9".
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    auto wanted = [&](int id) {
        if (only.empty()) return true;
        for (int v : only)
            if (v == id) return true;
        return false;
    };

    if (wanted(1)) criterion_1();
    if (wanted(2)) criterion_2();
    if (wanted(3)) criterion_3();
    if (wanted(4)) criterion_4();
    if (wanted(5)) criterion_5();
    if (wanted(6)) criterion_6();
    if (wanted(7)) criterion_7();
    if (wanted(8)) criterion_8();
    if (wanted(9)) criterion_9();
    if (wanted(10)) criterion_10();

    if (g_failures == 0) {
        std::printf("ACCEPTANCE OK (%s)\n", only.empty() ? "all criteria" : "selected criteria");
        return 0;
    }
    std::printf("ACCEPTANCE FAILED (%d criteria)\n", g_failures);
    return 1;
}
