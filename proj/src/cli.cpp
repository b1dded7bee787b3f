#include "opradius/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "opradius/campaign.hpp"
#include "opradius/eigen.hpp"
#include "opradius/matrix_io.hpp"
#include "opradius/radius.hpp"
#include "opradius/wmax.hpp"

namespace opradius {

namespace {

Json result_to_json(const CheckResult& r) {
    Json j;
    j["check_id"] = r.check_id;
    j["inequality_index"] = r.inequality_index;
    j["relation"] = r.relation;
    char dig[20];
    std::snprintf(dig, sizeof(dig), "%016llx", static_cast<unsigned long long>(r.input_digest));
    j["input_digest"] = dig;
    j["lhs"] = bracket_to_json(r.lhs);
    j["rhs"] = bracket_to_json(r.rhs);
    j["margin"] = r.margin;
    j["verdict"] = to_string(r.verdict);
    j["consistency_only"] = r.consistency_only;
    return j;
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const std::string& item : raw) {
        std::size_t start = 0;
        while (start <= item.size()) {
            const std::size_t comma = item.find(',', start);
            const std::string piece = item.substr(start, comma == std::string::npos ? std::string::npos
                                                                                    : comma - start);
            if (!piece.empty()) out.push_back(piece);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return out;
}

int cmd_verify(const std::vector<std::string>& suites_raw, const CampaignConfig& cfg) {
    CampaignConfig config = cfg;
    config.suites = split_ids(suites_raw);
    if (config.suites.empty()) config.suites = {"all"};
    const Report report = run_campaign(config);
    for (const CheckAggregate& a : report.checks) {
        char line[160];
        std::snprintf(line, sizeof(line),
                      "%-4s rows=%-6ld violations=%-4ld witnesses=%-6ld min_margin=%.3e mode=%s",
                      a.check_id.c_str(), a.rows, a.violations, a.equality_witnesses, a.min_margin,
                      a.mode.c_str());
        std::cout << line << "\n";
    }
    if (!config.out_path.empty()) std::cout << "report written to " << config.out_path << "\n";
    return report.total_violations() == 0 ? 0 : 2;
}

int cmd_check(const std::string& id, const std::vector<std::string>& files, double eps,
              double theta, int sign, int block_n, int dim_d, long budget, std::uint64_t seed) {
    const CheckSpec* spec = find_check(id);
    if (!spec) {
        std::cerr << "error: unknown check id " << id << "\n";
        return 1;
    }
    const int needed = spec->num_mats + spec->num_scalars;
    if (static_cast<int>(files.size()) != needed) {
        std::cerr << "error: " << id << " needs " << spec->num_mats << " matrix input(s)";
        if (spec->num_scalars > 0) std::cerr << " plus " << spec->num_scalars << " scalar matrix input(s)";
        std::cerr << ", got " << files.size() << "\n";
        return 1;
    }

    CheckInputs in;
    for (int i = 0; i < spec->num_mats; ++i) in.mats.push_back(load_matrix(files[i]));
    for (int i = 0; i < spec->num_scalars; ++i)
        in.scalars.push_back(load_matrix(files[spec->num_mats + i]));
    in.theta = theta;
    in.sign = sign >= 0 ? +1 : -1;
    in.wmax_budget = budget;
    in.rng = Rng(seed, 0);

    if (!in.scalars.empty()) {
        const int sr = in.scalars.front().rows();
        if (sr <= 0 || in.mats.front().rows() % sr != 0)
            throw std::runtime_error("scalar matrix size must divide the operator size");
        in.d = in.mats.front().rows() / sr;
        in.n = sr;
    } else if (spec->wmax_mode) {
        in.n = block_n;
        in.d = dim_d > 0 ? dim_d : in.mats.front().rows() / std::max(1, block_n);
        if (in.n * in.d != in.mats.front().rows())
            throw std::runtime_error("--block times --dim must equal the input size");
    } else {
        in.n = 1;
        in.d = in.mats.front().rows();
    }

    CheckConfig cc;
    cc.eps = eps;
    const std::vector<CheckResult> rows = spec->run(in, cc);
    bool violated = false;
    for (const CheckResult& r : rows) {
        std::cout << result_to_json(r).dump() << "\n";
        violated = violated || r.verdict == Verdict::violated;
    }
    return violated ? 2 : 0;
}

} // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"certified numerical radius, operator norm and W_max brackets "
                 "with a catalog of verified block-matrix inequalities"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a seeded campaign over the check catalog");
    std::vector<std::string> suites{"all"};
    CampaignConfig vcfg;
    verify->add_option("--suite", suites, "check ids or 'all'")->delimiter(',');
    verify->add_option("--dim", vcfg.d, "block size d of the matrix space (1-8)");
    verify->add_option("--block", vcfg.n, "scalar level n (1-2)");
    verify->add_option("--trials", vcfg.trials, "trials per check");
    verify->add_option("--seed", vcfg.seed, "campaign seed");
    verify->add_option("--eps", vcfg.eps, "radius bracket width");
    verify->add_option("--wmax-budget", vcfg.wmax_budget, "decomposition search budget");
    verify->add_option("--out", vcfg.out_path, "report json path")->required();
    verify->add_option("--csv", vcfg.csv_path, "margins csv path");

    // radius
    auto* radius = app.add_subcommand("radius", "certified numerical radius bracket of a matrix");
    std::string rad_input;
    double rad_eps = 1e-8;
    radius->add_option("--input", rad_input, "matrix json file")->required();
    radius->add_option("--eps", rad_eps, "bracket width");

    // norm
    auto* norm = app.add_subcommand("norm", "spectral norm of a matrix");
    std::string norm_input;
    norm->add_option("--input", norm_input, "matrix json file")->required();

    // wmax
    auto* wmax = app.add_subcommand("wmax", "W_max bracket of a matrix");
    std::string wmax_input;
    int wmax_n = 1, wmax_d = 0;
    long wmax_budget = 100;
    std::uint64_t wmax_seed = 0;
    wmax->add_option("--input", wmax_input, "matrix json file")->required();
    wmax->add_option("--block", wmax_n, "scalar level n")->required();
    wmax->add_option("--dim", wmax_d, "block size d (default: size/n)");
    wmax->add_option("--budget", wmax_budget, "decomposition search budget");
    wmax->add_option("--seed", wmax_seed, "search seed");

    // check
    auto* check = app.add_subcommand("check", "run one catalog check on given matrices");
    std::string check_id;
    std::vector<std::string> check_inputs;
    double check_eps = 1e-8, check_theta = 0.9;
    int check_sign = +1, check_n = 1, check_d = 0;
    long check_budget = 100;
    std::uint64_t check_seed = 0;
    check->add_option("--id", check_id, "check id (C1..C20)")->required();
    check->add_option("--inputs", check_inputs, "matrix json files")->required();
    check->add_option("--eps", check_eps, "radius bracket width");
    check->add_option("--theta", check_theta, "phase for C8");
    check->add_option("--sign", check_sign, "+1 or -1 for C5-C7");
    check->add_option("--block", check_n, "scalar level n for C13/C14");
    check->add_option("--dim", check_d, "block size d for C13/C14");
    check->add_option("--budget", check_budget, "decomposition budget for C13/C14");
    check->add_option("--seed", check_seed, "search seed for C13/C14");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(suites, vcfg);
        if (app.got_subcommand(radius)) {
            const CMatrix m = load_matrix(rad_input);
            const Bracket b = numerical_radius(m, rad_eps);
            std::cout << bracket_to_json(b).dump() << "\n";
            return 0;
        }
        if (app.got_subcommand(norm)) {
            const CMatrix m = load_matrix(norm_input);
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", spectral_norm(m));
            std::cout << buf << "\n";
            return 0;
        }
        if (app.got_subcommand(wmax)) {
            const CMatrix m = load_matrix(wmax_input);
            const int d = wmax_d > 0 ? wmax_d : m.rows() / std::max(1, wmax_n);
            Rng rng(wmax_seed, 0);
            const Bracket b = wmax_bracket(m, wmax_n, d, wmax_budget, rng);
            std::cout << bracket_to_json(b).dump() << "\n";
            return 0;
        }
        if (app.got_subcommand(check))
            return cmd_check(check_id, check_inputs, check_eps, check_theta, check_sign, check_n,
                             check_d, check_budget, check_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace opradius
