#include "opradius/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "opradius/eigen.hpp"
#include "opradius/matrix_io.hpp"

namespace opradius {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

int thread_count() {
    if (const char* env = std::getenv("OPRADIUS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<int>(std::min<long>(v, 256));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// 70% Ginibre, 10% Hermitian, 10% strictly-upper nilpotent, 10% Haar unitary.
// Structured draws hit the equality cases where bugs hide.
CMatrix draw_operator(int size, Rng& rng) {
    const double u = rng.uniform();
    if (u < 0.7) return random_ginibre(size, rng);
    if (u < 0.8) {
        const CMatrix g = random_ginibre(size, rng);
        return (g + g.adjoint()).scaled(0.5);
    }
    if (u < 0.9) {
        const CMatrix g = random_ginibre(size, rng);
        CMatrix nil(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) nil.at(i, j) = g.at(i, j);
        return nil;
    }
    return random_haar_unitary(size, rng);
}

struct TrialOutcome {
    std::vector<CheckResult> rows;
    long eigensolves = 0;
    bool failed = false;
    std::string error;
};

TrialOutcome run_trial(const CheckSpec& spec, const CampaignConfig& config, long trial) {
    TrialOutcome out;
    const long solves0 = eigensolve_count();
    try {
        CheckInputs in = draw_inputs(spec, config, trial);
        CheckConfig cc;
        cc.eps = config.eps;
        if (spec.uses_sign) {
            CheckInputs plus = in;
            plus.sign = +1;
            out.rows = spec.run(plus, cc);
            CheckInputs minus = in;
            minus.sign = -1;
            std::vector<CheckResult> more = spec.run(minus, cc);
            for (CheckResult& r : more) {
                r.inequality_index += spec.rows_per_invocation;
                out.rows.push_back(std::move(r));
            }
        } else {
            out.rows = spec.run(in, cc);
        }
    } catch (const std::exception& e) {
        out.failed = true;
        out.error = e.what();
    }
    out.eigensolves = eigensolve_count() - solves0;
    return out;
}

void format_double(std::string& dst, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    dst += buf;
}

} // namespace

void CampaignConfig::validate() const {
    if (d < 1 || d > 8) throw std::invalid_argument("campaign: block size d must be in 1..8");
    if (n < 1 || n > 2) throw std::invalid_argument("campaign: scalar level n must be 1 or 2");
    if (2 * n * d > 32) throw std::invalid_argument("campaign: total matrix dimension 2*n*d exceeds 32");
    if (trials < 1) throw std::invalid_argument("campaign: need at least one trial");
    if (!(eps > 0.0)) throw std::invalid_argument("campaign: eps must be positive");
    if (wmax_budget < 0) throw std::invalid_argument("campaign: wmax budget must be nonnegative");
    resolve_suites();
}

std::vector<const CheckSpec*> CampaignConfig::resolve_suites() const {
    if (suites.empty()) throw std::invalid_argument("campaign: no suites selected");
    std::vector<const CheckSpec*> out;
    for (const std::string& id : suites) {
        if (id == "all") {
            for (const CheckSpec& spec : catalog()) out.push_back(&spec);
            continue;
        }
        const CheckSpec* spec = find_check(id);
        if (!spec) throw std::invalid_argument("campaign: unknown check id " + id);
        out.push_back(spec);
    }
    // Drop duplicates, keep catalog order.
    std::vector<const CheckSpec*> uniq;
    for (const CheckSpec& spec : catalog())
        if (std::find(out.begin(), out.end(), &spec) != out.end()) uniq.push_back(&spec);
    return uniq;
}

CheckInputs draw_inputs(const CheckSpec& spec, const CampaignConfig& config, long trial) {
    CheckInputs in;
    in.n = config.n;
    in.d = config.d;
    in.wmax_budget = config.wmax_budget;
    Rng rng(config.seed, static_cast<std::uint64_t>(trial));
    const int size = config.n * config.d;
    for (int i = 0; i < spec.num_mats; ++i) in.mats.push_back(draw_operator(size, rng));
    for (int i = 0; i < spec.num_scalars; ++i) {
        in.scalars.push_back(spec.scalar_kind == ScalarKind::haar ? random_haar_unitary(config.n, rng)
                                                                  : random_ginibre(config.n, rng));
    }
    if (spec.uses_theta) in.theta = kTwoPi * rng.uniform();
    in.sign = +1;
    in.rng = rng; // wmax searches continue the trial's stream
    return in;
}

long Report::total_violations() const {
    long v = 0;
    for (const CheckAggregate& c : checks) v += c.violations;
    return v;
}

Report run_campaign(const CampaignConfig& config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<const CheckSpec*> specs = config.resolve_suites();

    std::vector<std::vector<TrialOutcome>> outcomes(specs.size());
    for (auto& v : outcomes) v.resize(config.trials);

    struct Task {
        std::size_t check_idx;
        long trial;
    };
    std::vector<Task> tasks;
    tasks.reserve(specs.size() * config.trials);
    for (std::size_t c = 0; c < specs.size(); ++c)
        for (long k = 0; k < config.trials; ++k) tasks.push_back({c, k});

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& t = tasks[i];
            outcomes[t.check_idx][t.trial] = run_trial(*specs[t.check_idx], config, t.trial);
        }
    };
    const int nthreads = std::min<int>(thread_count(), static_cast<int>(tasks.size()));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    Report report;
    report.config = config;
    std::vector<std::vector<std::vector<CheckResult>>> rows_by_check(specs.size());

    for (std::size_t c = 0; c < specs.size(); ++c) {
        const CheckSpec& spec = *specs[c];
        CheckAggregate agg;
        agg.check_id = spec.id;
        agg.mode = spec.wmax_mode ? "bracket_consistency" : "certified";
        agg.trials = config.trials;
        agg.rows_per_trial = spec.rows_per_trial();
        double sum_margin = 0.0;
        double min_margin = HUGE_VAL;
        rows_by_check[c].resize(config.trials);
        for (long k = 0; k < config.trials; ++k) {
            TrialOutcome& trial = outcomes[c][k];
            agg.eigensolves += trial.eigensolves;
            if (trial.failed) {
                ++agg.solver_failures;
                continue;
            }
            for (const CheckResult& r : trial.rows) {
                ++agg.rows;
                sum_margin += r.margin;
                min_margin = std::min(min_margin, r.margin);
                if (r.verdict == Verdict::violated) {
                    ++agg.violations;
                    ViolationRecord rec;
                    rec.check_id = r.check_id;
                    rec.trial = k;
                    rec.inequality_index = r.inequality_index;
                    rec.relation = r.relation;
                    rec.lhs = r.lhs;
                    rec.rhs = r.rhs;
                    rec.margin = r.margin;
                    CheckInputs in = draw_inputs(spec, config, k);
                    rec.mats = std::move(in.mats);
                    rec.scalars = std::move(in.scalars);
                    rec.theta = in.theta;
                    rec.sign = r.inequality_index >= spec.rows_per_invocation ? -1 : +1;
                    report.violations.push_back(std::move(rec));
                } else if (r.verdict == Verdict::equality_witness) {
                    ++agg.equality_witnesses;
                }
            }
            rows_by_check[c][k] = std::move(trial.rows);
        }
        agg.min_margin = agg.rows > 0 ? min_margin : 0.0;
        agg.mean_margin = agg.rows > 0 ? sum_margin / static_cast<double>(agg.rows) : 0.0;
        report.checks.push_back(std::move(agg));
    }

    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (!config.csv_path.empty()) write_margins_csv(config.csv_path, report, rows_by_check);
    if (!config.out_path.empty()) save_report(config.out_path, report);
    return report;
}

void write_margins_csv(const std::string& path, const Report& report,
                       const std::vector<std::vector<std::vector<CheckResult>>>& rows_by_check) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write csv file: " + path);
    out << "check_id,trial,inequality_index,lhs_lo,lhs_hi,rhs_lo,rhs_hi,margin,verdict\n";
    for (std::size_t c = 0; c < rows_by_check.size(); ++c) {
        for (std::size_t k = 0; k < rows_by_check[c].size(); ++k) {
            for (const CheckResult& r : rows_by_check[c][k]) {
                std::string line;
                line += r.check_id;
                line += ',';
                line += std::to_string(k);
                line += ',';
                line += std::to_string(r.inequality_index);
                line += ',';
                format_double(line, r.lhs.lo);
                line += ',';
                format_double(line, r.lhs.hi);
                line += ',';
                format_double(line, r.rhs.lo);
                line += ',';
                format_double(line, r.rhs.hi);
                line += ',';
                format_double(line, r.margin);
                line += ',';
                line += to_string(r.verdict);
                line += '\n';
                out << line;
            }
        }
    }
    (void)report;
}

Json bracket_to_json(const Bracket& b) {
    Json j;
    j["lo"] = b.lo;
    j["hi"] = b.hi;
    j["method"] = to_string(b.method);
    j["evals"] = b.evals;
    j["certified"] = b.certified;
    return j;
}

Bracket bracket_from_json(const Json& j) {
    Bracket b;
    b.lo = j.at("lo").get<double>();
    b.hi = j.at("hi").get<double>();
    b.method = bracket_method_from_string(j.at("method").get<std::string>());
    b.evals = j.at("evals").get<long>();
    b.certified = j.at("certified").get<bool>();
    return b;
}

Json report_to_json(const Report& report) {
    Json j;
    j["schema_version"] = report.schema_version;
    Json cfg;
    cfg["suites"] = report.config.suites;
    cfg["d"] = report.config.d;
    cfg["n"] = report.config.n;
    cfg["trials"] = report.config.trials;
    cfg["seed"] = report.config.seed;
    cfg["eps"] = report.config.eps;
    cfg["wmax_budget"] = report.config.wmax_budget;
    cfg["out_path"] = report.config.out_path;
    cfg["csv_path"] = report.config.csv_path;
    j["config"] = std::move(cfg);
    Json checks = Json::array();
    for (const CheckAggregate& a : report.checks) {
        Json c;
        c["check_id"] = a.check_id;
        c["mode"] = a.mode;
        c["trials"] = a.trials;
        c["rows_per_trial"] = a.rows_per_trial;
        c["rows"] = a.rows;
        c["violations"] = a.violations;
        c["equality_witnesses"] = a.equality_witnesses;
        c["min_margin"] = a.min_margin;
        c["mean_margin"] = a.mean_margin;
        c["eigensolves"] = a.eigensolves;
        c["solver_failures"] = a.solver_failures;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    Json viols = Json::array();
    for (const ViolationRecord& v : report.violations) {
        Json r;
        r["check_id"] = v.check_id;
        r["trial"] = v.trial;
        r["inequality_index"] = v.inequality_index;
        r["relation"] = v.relation;
        r["lhs"] = bracket_to_json(v.lhs);
        r["rhs"] = bracket_to_json(v.rhs);
        r["margin"] = v.margin;
        Json mats = Json::array();
        for (const CMatrix& m : v.mats) mats.push_back(matrix_to_json(m));
        r["mats"] = std::move(mats);
        Json scalars = Json::array();
        for (const CMatrix& m : v.scalars) scalars.push_back(matrix_to_json(m));
        r["scalars"] = std::move(scalars);
        r["theta"] = v.theta;
        r["sign"] = v.sign;
        viols.push_back(std::move(r));
    }
    j["violations"] = std::move(viols);
    j["wall_time_seconds"] = report.wall_time_seconds;
    return j;
}

Report report_from_json(const Json& j) {
    Report report;
    report.schema_version = j.at("schema_version").get<std::string>();
    const Json& cfg = j.at("config");
    report.config.suites = cfg.at("suites").get<std::vector<std::string>>();
    report.config.d = cfg.at("d").get<int>();
    report.config.n = cfg.at("n").get<int>();
    report.config.trials = cfg.at("trials").get<long>();
    report.config.seed = cfg.at("seed").get<std::uint64_t>();
    report.config.eps = cfg.at("eps").get<double>();
    report.config.wmax_budget = cfg.at("wmax_budget").get<long>();
    report.config.out_path = cfg.at("out_path").get<std::string>();
    report.config.csv_path = cfg.at("csv_path").get<std::string>();
    for (const Json& c : j.at("checks")) {
        CheckAggregate a;
        a.check_id = c.at("check_id").get<std::string>();
        a.mode = c.at("mode").get<std::string>();
        a.trials = c.at("trials").get<long>();
        a.rows_per_trial = c.at("rows_per_trial").get<int>();
        a.rows = c.at("rows").get<long>();
        a.violations = c.at("violations").get<long>();
        a.equality_witnesses = c.at("equality_witnesses").get<long>();
        a.min_margin = c.at("min_margin").get<double>();
        a.mean_margin = c.at("mean_margin").get<double>();
        a.eigensolves = c.at("eigensolves").get<long>();
        a.solver_failures = c.at("solver_failures").get<long>();
        report.checks.push_back(std::move(a));
    }
    for (const Json& r : j.at("violations")) {
        ViolationRecord v;
        v.check_id = r.at("check_id").get<std::string>();
        v.trial = r.at("trial").get<long>();
        v.inequality_index = r.at("inequality_index").get<int>();
        v.relation = r.at("relation").get<std::string>();
        v.lhs = bracket_from_json(r.at("lhs"));
        v.rhs = bracket_from_json(r.at("rhs"));
        v.margin = r.at("margin").get<double>();
        for (const Json& m : r.at("mats")) v.mats.push_back(matrix_from_json(m));
        for (const Json& m : r.at("scalars")) v.scalars.push_back(matrix_from_json(m));
        v.theta = r.at("theta").get<double>();
        v.sign = r.at("sign").get<int>();
        report.violations.push_back(std::move(v));
    }
    report.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    return report;
}

void save_report(const std::string& path, const Report& report) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report file: " + path);
    out << report_to_json(report).dump(2) << "\n";
}

Report load_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open report file: " + path);
    Json j;
    in >> j;
    return report_from_json(j);
}

std::vector<CMatrix> shrink(const ViolationPred& still_violates, std::vector<CMatrix> inputs) {
    if (inputs.empty() || !still_violates(inputs)) return inputs;

    auto truncated = [](const CMatrix& m, int size) {
        CMatrix out(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) out.at(i, j) = m.at(i, j);
        return out;
    };

    bool changed = true;
    while (changed) {
        changed = false;

        // Entry zeroing, one entry at a time.
        for (std::size_t m = 0; m < inputs.size(); ++m) {
            for (int i = 0; i < inputs[m].rows(); ++i) {
                for (int j = 0; j < inputs[m].cols(); ++j) {
                    if (inputs[m].at(i, j) == Complex(0.0, 0.0)) continue;
                    std::vector<CMatrix> cand = inputs;
                    cand[m].at(i, j) = Complex(0.0, 0.0);
                    if (still_violates(cand)) {
                        inputs = std::move(cand);
                        changed = true;
                    }
                }
            }
        }

        // Dimension halving to leading principal blocks, all inputs together.
        bool all_square = true;
        for (const CMatrix& m : inputs)
            all_square = all_square && m.is_square() && m.same_shape(inputs.front());
        if (all_square && inputs.front().rows() >= 2) {
            const int half = inputs.front().rows() / 2;
            std::vector<CMatrix> cand;
            cand.reserve(inputs.size());
            for (const CMatrix& m : inputs) cand.push_back(truncated(m, half));
            if (still_violates(cand)) {
                inputs = std::move(cand);
                changed = true;
            }
        }

        // Magnitude halving per input.
        for (std::size_t m = 0; m < inputs.size(); ++m) {
            if (inputs[m].is_zero()) continue;
            std::vector<CMatrix> cand = inputs;
            cand[m] = cand[m].scaled(0.5);
            if (still_violates(cand)) {
                inputs = std::move(cand);
                changed = true;
            }
        }
    }
    return inputs;
}

std::vector<CMatrix> shrink(const std::string& check_id, const std::vector<CMatrix>& inputs,
                            const CheckInputs& proto, const CheckConfig& cfg) {
    const CheckSpec* spec = find_check(check_id);
    if (!spec) throw std::invalid_argument("shrink: unknown check id " + check_id);
    ViolationPred pred = [&](const std::vector<CMatrix>& mats) {
        CheckInputs in = proto;
        in.mats = mats;
        try {
            const std::vector<CheckResult> rows = spec->run(in, cfg);
            for (const CheckResult& r : rows)
                if (r.verdict == Verdict::violated) return true;
        } catch (const std::exception&) {
            return false;
        }
        return false;
    };
    return shrink(pred, inputs);
}

} // namespace opradius
