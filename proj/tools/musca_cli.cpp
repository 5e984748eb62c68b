// Command-line front end: Monte Carlo runs, load/SNR sweeps, degree
// distribution search, and the four-user reference decoding trace.
// Exit codes: 0 success, 1 runtime failure, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "musca/experiment_config.hpp"
#include "musca/scenario.hpp"

namespace {

using namespace musca;

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Output {
    std::ostringstream buffer;

    int flush(const std::string& out_path) {
        if (out_path.empty()) {
            std::cout << buffer.str();
            return 0;
        }
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        file << buffer.str();
        return 0;
    }
};

void emit_result_row(std::ostream& out, const EstimateResult& r, std::uint64_t seed) {
    out << fmt6(r.g) << ',' << fmt6(r.snr_db) << ',' << fmt6(r.plr) << ',' << fmt6(r.plr_ci95)
        << ',' << fmt6(r.throughput) << ',' << r.trials_run << ',' << seed << '\n';
}

int cmd_simulate(const ExperimentConfig& cfg) {
    const PerTable table = cfg.resolve_table();
    const auto result = estimate(cfg.to_plan(), table);
    Output out;
    out.buffer << "g,snr_db,plr,plr_ci95,throughput,trials,seed\n";
    emit_result_row(out.buffer, result, cfg.seed);
    return out.flush(cfg.out_path);
}

int cmd_sweep_load(const ExperimentConfig& cfg) {
    if (cfg.g_values.empty())
        throw ConfigError("sweep-load: empty load grid");
    const PerTable table = cfg.resolve_table();
    Output out;
    out.buffer << "g,snr_db,plr,plr_ci95,throughput,trials,seed\n";
    for (const auto& r : sweep_load(cfg.to_plan(), table, cfg.g_values))
        emit_result_row(out.buffer, r, cfg.seed);
    return out.flush(cfg.out_path);
}

int cmd_sweep_snr(const ExperimentConfig& cfg) {
    if (cfg.g_values.empty() || cfg.snr_values.empty())
        throw ConfigError("sweep-snr: empty grid");
    const PerTable table = cfg.resolve_table();
    Output out;
    out.buffer << "g,snr_db,plr,plr_ci95,throughput,trials,seed,peak_g,peak_t\n";
    for (const auto& row : sweep_snr(cfg.to_plan(), table, cfg.snr_values, cfg.g_values)) {
        for (const auto& r : row.by_g) {
            out.buffer << fmt6(r.g) << ',' << fmt6(r.snr_db) << ',' << fmt6(r.plr) << ','
                       << fmt6(r.plr_ci95) << ',' << fmt6(r.throughput) << ',' << r.trials_run
                       << ',' << cfg.seed << ',' << fmt6(row.best_g) << ',' << fmt6(row.best_t)
                       << '\n';
        }
    }
    return out.flush(cfg.out_path);
}

int cmd_optimize(const ExperimentConfig& cfg) {
    const PerTable table = cfg.resolve_table();
    const auto result = optimize(cfg.to_search_spec(), table);
    Output out;
    for (int d : cfg.degrees) out.buffer << 'p' << d << ',';
    out.buffer << "peak_T,peak_G\n";
    for (const auto& cand : result.ranking) {
        for (double p : cand.probabilities) out.buffer << fmt6(p) << ',';
        out.buffer << fmt6(cand.peak_throughput) << ',' << fmt6(cand.peak_g) << '\n';
    }
    return out.flush(cfg.out_path);
}

void print_trace(std::ostream& out, const DecodeReport& report) {
    for (const auto& e : report.events) {
        out << "  " << (e.phase == Phase::locate ? "locate" : "data  ") << " user " << e.user_id
            << "  config " << e.config.to_string() << "  per " << fmt6(e.per_used) << "  "
            << (e.success ? "success" : "failure") << '\n';
    }
    out << "  decoded " << report.decoded.size() << "/4, deadlock "
        << (report.deadlock ? "yes" : "no") << '\n';
}

int cmd_example(std::uint64_t seed) {
    const PerTable table = builtin_anchor_table();

    std::cout << "four users, three slots, Es/N0 = " << kScenarioSnrDb << " dB\n";
    std::cout << "forced-success trace:\n";
    Frame forced = four_user_scenario();
    DecodePolicy policy;
    policy.force_success = true;
    Rng rng_forced(seed);
    const auto report = decode_frame(forced, table, kScenarioSnrDb, policy, rng_forced);
    print_trace(std::cout, report);

    std::cout << "stochastic trace (seed " << seed << "):\n";
    Frame stochastic = four_user_scenario();
    DecodePolicy draw_policy;
    Rng rng(seed);
    print_trace(std::cout, decode_frame(stochastic, table, kScenarioSnrDb, draw_policy, rng));

    // Gate: the forced trace must locate 1,4,2,3 and decode 4,1,2,3 in order.
    std::vector<int> locate_order, data_order;
    for (const auto& e : report.events) {
        if (!e.success) continue;
        (e.phase == Phase::locate ? locate_order : data_order).push_back(e.user_id);
    }
    const bool ok = locate_order == std::vector<int>{1, 4, 2, 3} &&
                    data_order == std::vector<int>{4, 1, 2, 3} && report.decoded.size() == 4 &&
                    !report.deadlock;
    std::cout << (ok ? "reference sequence reproduced\n" : "reference sequence NOT reproduced\n");
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frame-level Monte Carlo simulator for slotted random access with SIC"};
    app.require_subcommand(1);

    std::string config_path, out_path, dist_text, mode_text, table_text;
    std::vector<std::string> per_table_paths;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int trials = 0;
    double snr = 0.0, g = 0.0;
    bool snr_set = false, g_set = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Config file (key = value with [sections])");
        sub->add_option("--seed", seed, "Master seed")->each([&](const std::string&) { seed_set = true; });
        sub->add_option("--trials", trials, "Trials per point");
        sub->add_option("--per-table", per_table_paths, "PER table file (repeatable)");
        sub->add_option("--out", out_path, "Output CSV path (default stdout)");
        sub->add_option("--snr", snr, "Es/N0 in dB")->each([&](const std::string&) { snr_set = true; });
        sub->add_option("--g", g, "Normalized load")->each([&](const std::string&) { g_set = true; });
        sub->add_option("--dist", dist_text, "Degree distribution, e.g. 1:0.1,2:0.3,3:0.6");
        sub->add_option("--mode", mode_text, "musca|crdsa|irsa|sa");
        sub->add_option("--table", table_text, "Builtin table: anchors|collision|ideal");
    };

    auto* sim = app.add_subcommand("simulate", "Single Monte Carlo estimate, one CSV row");
    auto* sweep_l = app.add_subcommand("sweep-load", "Throughput/PLR versus normalized load");
    auto* sweep_s = app.add_subcommand("sweep-snr", "Full SNR x load sweep with per-SNR peaks");
    auto* opt = app.add_subcommand("optimize", "Grid search over degree distributions");
    auto* example = app.add_subcommand("example", "Four-user reference decoding trace");
    for (auto* sub : {sim, sweep_l, sweep_s, opt}) add_common(sub);
    example->add_option("--seed", seed, "Seed for the stochastic trace")
        ->each([&](const std::string&) { seed_set = true; });

    CLI11_PARSE(app, argc, argv);

    try {
        if (example->parsed()) return cmd_example(seed_set ? seed : 1);

        ExperimentConfig cfg;
        if (!config_path.empty()) cfg = load_experiment_config(config_path);
        if (!mode_text.empty()) cfg.mode = parse_mode(mode_text);
        if (seed_set) cfg.seed = seed;
        if (trials > 0) cfg.trials = cfg.optimize_trials = trials;
        if (snr_set) cfg.snr_db = snr;
        if (g_set) cfg.g = g;
        if (!dist_text.empty()) cfg.dist = DegreeDistribution::parse(dist_text);
        if (!out_path.empty()) cfg.out_path = out_path;
        if (!table_text.empty()) {
            if (table_text == "anchors") cfg.table = TableSource::anchors;
            else if (table_text == "collision") cfg.table = TableSource::collision;
            else if (table_text == "ideal") cfg.table = TableSource::ideal;
            else throw ConfigError("unknown table '" + table_text + "'");
        }
        for (const auto& p : per_table_paths) {
            if (!std::filesystem::exists(p))
                throw ConfigError("PER table file does not exist: " + p);
            cfg.per_table_files.emplace_back(p);
        }

        if (sim->parsed()) return cmd_simulate(cfg);
        if (sweep_l->parsed()) return cmd_sweep_load(cfg);
        if (sweep_s->parsed()) return cmd_sweep_snr(cfg);
        if (opt->parsed()) return cmd_optimize(cfg);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
