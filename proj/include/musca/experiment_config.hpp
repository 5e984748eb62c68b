#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "musca/montecarlo.hpp"
#include "musca/optimizer.hpp"

namespace musca {

/// Thrown for malformed or inconsistent configuration; the CLI maps it to
/// exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TableSource { anchors, collision, ideal };

/// Experiment description shared by all subcommands. Populated from a
/// key-value config file with one level of nesting ([section] key = value)
/// and overridable by command-line flags.
struct ExperimentConfig {
    // [plan]
    DecodeMode mode = DecodeMode::musca;
    double snr_db = 8.0;
    double g = 1.0;
    int n_slots = 100;
    int trials = 10000;
    std::uint64_t seed = 1;
    std::optional<DegreeDistribution> dist; // default depends on mode
    std::optional<TableSource> table;       // default depends on mode
    std::vector<std::filesystem::path> per_table_files;
    int workers = 1;

    // [sweep]
    std::vector<double> g_values = grid(0.1, 1.6, 0.1);
    std::vector<double> snr_values = grid(0.0, 10.0, 2.0);

    // [optimize]
    std::vector<int> degrees = {1, 2, 3};
    double step = 0.05;
    std::vector<double> g_grid = grid(0.5, 1.8, 0.05);
    int optimize_trials = 2000;

    // [output]
    std::string out_path; // empty = stdout

    DegreeDistribution effective_dist() const;
    PerTable resolve_table() const;
    TrialPlan to_plan() const;
    SearchSpec to_search_spec() const;
};

/// Parse a config file. Unknown sections or keys, unreadable referenced
/// files, and out-of-range values are ConfigErrors naming the offender.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

DecodeMode parse_mode(const std::string& text);
const char* mode_name(DecodeMode mode);

/// "a,b,c" or "first:last:step".
std::vector<double> parse_value_list(const std::string& text);

} // namespace musca
