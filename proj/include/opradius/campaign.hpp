#pragma once

#include <functional>
#include <string>
#include <vector>

#include "opradius/checks.hpp"
#include "opradius/matrix_io.hpp"

namespace opradius {

/// Parameters of one seeded randomized campaign over the catalog.
struct CampaignConfig {
    std::vector<std::string> suites{"all"};
    int d = 2;          // block size of the underlying matrix space (1-8)
    int n = 1;          // scalar level (1-2)
    long trials = 100;
    std::uint64_t seed = 0;
    double eps = 1e-8;
    long wmax_budget = 100;
    std::string out_path;
    std::string csv_path;

    /// Throws when a field is out of range or the total matrix dimension cap
    /// 2*n*d <= 32 is exceeded.
    void validate() const;
    /// Expands "all" and validates ids.
    std::vector<const CheckSpec*> resolve_suites() const;
};

struct CheckAggregate {
    std::string check_id;
    std::string mode; // "certified" or "bracket_consistency"
    long trials = 0;
    int rows_per_trial = 0;
    long rows = 0;
    long violations = 0;
    long equality_witnesses = 0;
    double min_margin = 0.0;
    double mean_margin = 0.0;
    long eigensolves = 0;
    long solver_failures = 0;
};

struct ViolationRecord {
    std::string check_id;
    long trial = 0;
    int inequality_index = 0;
    std::string relation;
    Bracket lhs;
    Bracket rhs;
    double margin = 0.0;
    std::vector<CMatrix> mats;
    std::vector<CMatrix> scalars;
    double theta = 0.0;
    int sign = +1;
};

struct Report {
    std::string schema_version = "1";
    CampaignConfig config;
    std::vector<CheckAggregate> checks;
    std::vector<ViolationRecord> violations;
    double wall_time_seconds = 0.0;

    long total_violations() const;
};

/// Runs every selected check on `trials` seeded input tuples. Trial k draws
/// from Rng stream k, so results are deterministic given (seed, config) and
/// independent of the number of worker threads (OPRADIUS_THREADS caps
/// concurrency; 0 or unset picks a default). Writes the report (and the CSV
/// margin dump) when paths are set.
Report run_campaign(const CampaignConfig& config);

/// Draws the level-n matrices and scalars for one (check, trial) pair; the
/// same stream produces the same tuple regardless of which suites run.
CheckInputs draw_inputs(const CheckSpec& spec, const CampaignConfig& config, long trial);

/// Writes one CSV row per inequality result:
/// check_id,trial,inequality_index,lhs_lo,lhs_hi,rhs_lo,rhs_hi,margin,verdict.
void write_margins_csv(const std::string& path, const Report& report,
                       const std::vector<std::vector<std::vector<CheckResult>>>& rows_by_check);

Json bracket_to_json(const Bracket& b);
Bracket bracket_from_json(const Json& j);
Json report_to_json(const Report& report);
Report report_from_json(const Json& j);
void save_report(const std::string& path, const Report& report);
Report load_report(const std::string& path);

/// Greedy input minimizer: attempts entry-zeroing, dimension halving (leading
/// principal blocks) and magnitude halving while `still_violates` holds.
/// Returns the original inputs when nothing smaller violates.
using ViolationPred = std::function<bool(const std::vector<CMatrix>&)>;
std::vector<CMatrix> shrink(const ViolationPred& still_violates, std::vector<CMatrix> inputs);

/// Shrinks the matrix inputs of a catalog check, holding scalars, theta, sign
/// and rng fixed from `proto`. The predicate is "the check reports at least
/// one violated row".
std::vector<CMatrix> shrink(const std::string& check_id, const std::vector<CMatrix>& inputs,
                            const CheckInputs& proto, const CheckConfig& cfg);

} // namespace opradius
