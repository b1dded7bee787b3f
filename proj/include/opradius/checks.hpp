#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opradius/bracket.hpp"
#include "opradius/cmatrix.hpp"
#include "opradius/rng.hpp"

namespace opradius {

enum class Verdict { consistent, violated, equality_witness };

std::string to_string(Verdict v);

/// Outcome of one inequality (or equality) of one catalog check on one input
/// tuple. A claim LHS <= RHS is `violated` only when lhs.lo exceeds rhs.hi by
/// more than the base tolerance plus both bracket widths, so certified-but-
/// finite precision never raises a false alarm. `equality_witness` marks
/// brackets that meet within the identity tolerance.
struct CheckResult {
    std::string check_id;
    int inequality_index = 0;
    std::string relation;
    std::uint64_t input_digest = 0;
    Bracket lhs;
    Bracket rhs;
    /// Certified worst-case slack: rhs.hi - lhs.lo for LHS <= RHS claims, the
    /// smaller of the two directed slacks for equality claims.
    double margin = 0.0;
    Verdict verdict = Verdict::consistent;
    /// True for W_max checks, which compare brackets for contradictions but
    /// cannot certify tightness.
    bool consistency_only = false;
};

struct CheckConfig {
    /// Width request for every numerical-radius bracket.
    double eps = 1e-8;
    /// Gap below which brackets count as meeting (equality witness).
    double witness_tol = 1e-7;
    /// Base slack added to bracket widths in the violation rule.
    double violation_tol = 1e-7;
};

/// Uniform input bundle for driving any catalog check.
struct CheckInputs {
    std::vector<CMatrix> mats;    // level-n operators, each (n*d) x (n*d)
    std::vector<CMatrix> scalars; // n x n scalar matrices (alpha, ..., or U)
    double theta = 0.0;
    int sign = +1;
    int n = 1;
    int d = 1;
    long wmax_budget = 100;
    Rng rng{0, 0};
};

enum class ScalarKind { none, ginibre, haar };

struct CheckSpec {
    const char* id;
    const char* title;
    int num_mats;
    int num_scalars;
    ScalarKind scalar_kind;
    bool uses_theta;
    bool uses_sign;
    bool wmax_mode;
    int rows_per_invocation;
    std::vector<CheckResult> (*run)(CheckInputs&, const CheckConfig&);

    /// Rows a campaign trial produces (sign checks run with both signs).
    int rows_per_trial() const { return rows_per_invocation * (uses_sign ? 2 : 1); }
};

/// The executable catalog, one entry per verified result, ids C1..C20.
const std::vector<CheckSpec>& catalog();
const CheckSpec* find_check(const std::string& id);

// The catalog checks. W denotes a certified numerical-radius bracket at
// cfg.eps, O a spectral-norm value with its accuracy pad. Inputs at level n
// are (n*d) x (n*d); scalar matrices act through scalar_embed.

std::vector<CheckResult> check_C1_sandwich(const CMatrix& x, const CheckConfig& cfg);
std::vector<CheckResult> check_C2_unitary(const CMatrix& x, const CMatrix& U, int d,
                                          const CheckConfig& cfg);
std::vector<CheckResult> check_C3_offdiag_O(const CMatrix& x, const CMatrix& y,
                                            const CheckConfig& cfg);
std::vector<CheckResult> check_C4_offdiag_W(const CMatrix& x, const CMatrix& y,
                                            const CheckConfig& cfg);
std::vector<CheckResult> check_C5_general(const CMatrix& x, const CMatrix& y, const CMatrix& alpha,
                                          const CMatrix& beta, const CMatrix& gamma,
                                          const CMatrix& delta, int sign, int d,
                                          const CheckConfig& cfg);
std::vector<CheckResult> check_C6_corollary1(const CMatrix& x, const CMatrix& y,
                                             const CMatrix& alpha, const CMatrix& beta, int sign,
                                             int d, const CheckConfig& cfg);
std::vector<CheckResult> check_C7_corollary2(const CMatrix& x, const CMatrix& y,
                                             const CMatrix& alpha, const CMatrix& gamma, int sign,
                                             int d, const CheckConfig& cfg);
std::vector<CheckResult> check_C8_identities(const CMatrix& x, const CMatrix& y, double theta,
                                             const CheckConfig& cfg);
std::vector<CheckResult> check_C9_main(const CMatrix& x, const CMatrix& y, const CheckConfig& cfg);
std::vector<CheckResult> check_C10_sumdiff(const CMatrix& x, const CMatrix& y,
                                           const CheckConfig& cfg);
std::vector<CheckResult> check_C11_minbound(const CMatrix& x, const CMatrix& y,
                                            const CheckConfig& cfg);
std::vector<CheckResult> check_C12_abs_lower(const CMatrix& x, const CMatrix& y,
                                             const CheckConfig& cfg);
std::vector<CheckResult> check_C13_wmax_sumdiff(const CMatrix& x1, const CMatrix& x2, int n, int d,
                                                long budget, Rng& rng, const CheckConfig& cfg);
std::vector<CheckResult> check_C14_wmax_offdiag(const CMatrix& x1, const CMatrix& x2, int n, int d,
                                                long budget, Rng& rng, const CheckConfig& cfg);
std::vector<CheckResult> check_C15_pinching(const CMatrix& x, const CMatrix& y, const CMatrix& z,
                                            const CMatrix& w, const CheckConfig& cfg);
std::vector<CheckResult> check_C16_skew(const CMatrix& x, const CMatrix& y, const CheckConfig& cfg);
std::vector<CheckResult> check_C17_identity_O(const CMatrix& x, const CheckConfig& cfg);
std::vector<CheckResult> check_C18_fourentry(const CMatrix& x, const CMatrix& y, const CMatrix& z,
                                             const CMatrix& w, const CheckConfig& cfg);
std::vector<CheckResult> check_C19_rotated(const CMatrix& x, const CMatrix& y, const CMatrix& z,
                                           const CMatrix& w, const CheckConfig& cfg);
std::vector<CheckResult> check_C20_final(const CMatrix& x, const CMatrix& y, const CMatrix& z,
                                         const CMatrix& w, const CheckConfig& cfg);

} // namespace opradius
