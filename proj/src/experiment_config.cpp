#include "musca/experiment_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace musca {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

TableSource parse_table_source(const std::string& text) {
    if (text == "anchors") return TableSource::anchors;
    if (text == "collision") return TableSource::collision;
    if (text == "ideal") return TableSource::ideal;
    throw ConfigError("unknown table source '" + text + "' (anchors|collision|ideal)");
}

} // namespace

DecodeMode parse_mode(const std::string& text) {
    if (text == "musca") return DecodeMode::musca;
    if (text == "crdsa") return DecodeMode::crdsa;
    if (text == "irsa") return DecodeMode::irsa;
    if (text == "sa") return DecodeMode::sa;
    throw ConfigError("unknown mode '" + text + "' (musca|crdsa|irsa|sa)");
}

const char* mode_name(DecodeMode mode) {
    switch (mode) {
        case DecodeMode::musca: return "musca";
        case DecodeMode::crdsa: return "crdsa";
        case DecodeMode::irsa: return "irsa";
        case DecodeMode::sa: return "sa";
    }
    return "?";
}

std::vector<double> parse_value_list(const std::string& text) {
    const auto colon_parts = split(text, ':');
    if (colon_parts.size() == 3)
        return grid(std::stod(colon_parts[0]), std::stod(colon_parts[1]), std::stod(colon_parts[2]));
    std::vector<double> out;
    for (const auto& item : split(text, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

DegreeDistribution ExperimentConfig::effective_dist() const {
    if (dist) return *dist;
    switch (mode) {
        case DecodeMode::sa: return DegreeDistribution::single(1);
        case DecodeMode::crdsa: return DegreeDistribution::single(3);
        default:
            // The optimal irregular distribution from the comparison study.
            return DegreeDistribution({{1, 0.1}, {2, 0.3}, {3, 0.6}});
    }
}

PerTable ExperimentConfig::resolve_table() const {
    if (!per_table_files.empty()) {
        if (table)
            throw ConfigError("both a builtin table and PER table files were given; choose one");
        PerTable merged(2);
        for (const auto& path : per_table_files) {
            const PerTable loaded = load_per_table(path);
            for (const auto& row : loaded.rows())
                merged.insert(row.code_id, row.snr_db, InterferenceConfig(row.config), row.per);
        }
        merged.validate();
        return merged;
    }
    TableSource source = table.value_or(mode == DecodeMode::musca ? TableSource::anchors
                                                                  : TableSource::collision);
    switch (source) {
        case TableSource::ideal: return PerTable::ideal();
        case TableSource::collision: {
            std::vector<std::string> code_ids = {"turbo_r12", "turbo_r14", "turbo_r16", "rm14_64"};
            return collision_channel_table(code_ids);
        }
        case TableSource::anchors: return builtin_anchor_table();
    }
    return builtin_anchor_table();
}

TrialPlan ExperimentConfig::to_plan() const {
    TrialPlan plan;
    plan.n_slots = n_slots;
    plan.n_users = static_cast<int>(std::lround(g * n_slots));
    plan.dist = effective_dist();
    plan.snr_db = snr_db;
    plan.trials = trials;
    plan.master_seed = seed;
    plan.policy.mode = mode;
    plan.workers = workers;
    return plan;
}

SearchSpec ExperimentConfig::to_search_spec() const {
    SearchSpec spec;
    spec.degrees = degrees;
    spec.step = step;
    spec.snr_db = snr_db;
    spec.n_slots = n_slots;
    spec.trials_per_candidate = optimize_trials;
    spec.g_grid = g_grid;
    spec.master_seed = seed;
    spec.policy.mode = mode;
    return spec;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path.string());
    ExperimentConfig cfg;
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": malformed section");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "plan" && section != "sweep" && section != "optimize" && section != "output")
                throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                                  ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (section == "plan") {
                if (key == "mode") cfg.mode = parse_mode(value);
                else if (key == "snr_db") cfg.snr_db = std::stod(value);
                else if (key == "g") cfg.g = std::stod(value);
                else if (key == "slots") cfg.n_slots = std::stoi(value);
                else if (key == "trials") cfg.trials = std::stoi(value);
                else if (key == "seed") cfg.seed = std::stoull(value);
                else if (key == "workers") cfg.workers = std::stoi(value);
                else if (key == "dist") cfg.dist = DegreeDistribution::parse(value);
                else if (key == "table") cfg.table = parse_table_source(value);
                else if (key == "per_table") {
                    for (const auto& file : split(value, ','))
                        cfg.per_table_files.emplace_back(file);
                } else
                    throw ConfigError("unknown key '" + key + "' in [plan]");
            } else if (section == "sweep") {
                if (key == "g_values") cfg.g_values = parse_value_list(value);
                else if (key == "snr_values") cfg.snr_values = parse_value_list(value);
                else
                    throw ConfigError("unknown key '" + key + "' in [sweep]");
            } else if (section == "optimize") {
                if (key == "degrees") {
                    cfg.degrees.clear();
                    for (double d : parse_value_list(value)) cfg.degrees.push_back(static_cast<int>(d));
                } else if (key == "step") cfg.step = std::stod(value);
                else if (key == "g_grid") cfg.g_grid = parse_value_list(value);
                else if (key == "trials") cfg.optimize_trials = std::stoi(value);
                else
                    throw ConfigError("unknown key '" + key + "' in [optimize]");
            } else if (section == "output") {
                if (key == "out") cfg.out_path = value;
                else
                    throw ConfigError("unknown key '" + key + "' in [output]");
            } else {
                throw ConfigError("key '" + key + "' outside any section");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    for (const auto& file : cfg.per_table_files)
        if (!std::filesystem::exists(file))
            throw ConfigError("PER table file does not exist: " + file.string());
    if (cfg.trials < 1 || cfg.n_slots < 1)
        throw ConfigError("trials and slots must be >= 1");
    return cfg;
}

} // namespace musca
