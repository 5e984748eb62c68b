#include "musca/per_table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace musca {

namespace {

std::string config_text(const std::vector<int>& config) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (i) out << ' ';
        if (config[i] == InterferenceConfig::kErased)
            out << 'e';
        else
            out << config[i];
    }
    out << ']';
    return out.str();
}

} // namespace

void PerTable::insert(const std::string& code_id, double snr_db, const InterferenceConfig& config,
                      double per) {
    if (per < 0.0 || per > 1.0)
        throw std::invalid_argument("per table: PER " + std::to_string(per) + " outside [0,1]");
    const auto key = config.with_erasures(erasure_threshold_).counts();
    auto& curve = entries_[code_id][key];
    auto it = std::lower_bound(curve.begin(), curve.end(), snr_db,
                               [](const auto& p, double s) { return p.first < s; });
    if (it != curve.end() && it->first == snr_db)
        throw std::invalid_argument("per table: duplicate key " + code_id + " " + config_text(key) +
                                    " at " + std::to_string(snr_db) + " dB");
    curve.insert(it, {snr_db, per});
}

void PerTable::validate() const {
    for (const auto& [code, configs] : entries_) {
        for (const auto& [config, curve] : configs) {
            for (std::size_t i = 1; i < curve.size(); ++i) {
                if (curve[i].second > curve[i - 1].second)
                    throw std::invalid_argument("per table: PER not non-increasing in SNR for " + code +
                                                " " + config_text(config));
            }
        }
        // Dominance between same-length configs, checked at SNRs stored in both.
        for (auto a = configs.begin(); a != configs.end(); ++a) {
            for (auto b = std::next(a); b != configs.end(); ++b) {
                if (a->first.size() != b->first.size()) continue;
                const bool a_dom = InterferenceConfig(a->first).dominates(InterferenceConfig(b->first));
                const bool b_dom = InterferenceConfig(b->first).dominates(InterferenceConfig(a->first));
                if (!a_dom && !b_dom) continue;
                const auto& lo = a_dom ? *b : *a; // dominated: less interference
                const auto& hi = a_dom ? *a : *b;
                for (const auto& [snr, per_lo] : lo.second) {
                    auto it = std::lower_bound(hi.second.begin(), hi.second.end(), snr,
                                               [](const auto& p, double s) { return p.first < s; });
                    if (it == hi.second.end() || it->first != snr) continue;
                    if (it->second < per_lo)
                        throw std::invalid_argument("per table: dominance violation for " + code + " " +
                                                    config_text(hi.first) + " < " + config_text(lo.first) +
                                                    " at " + std::to_string(snr) + " dB");
                }
            }
        }
    }
}

double PerTable::interpolate(const SnrCurve& curve, double snr_db) {
    if (curve.size() == 1) return curve.front().second;
    if (snr_db <= curve.front().first) return curve.front().second;
    if (snr_db >= curve.back().first) return curve.back().second;
    auto hi = std::lower_bound(curve.begin(), curve.end(), snr_db,
                               [](const auto& p, double s) { return p.first < s; });
    if (hi->first == snr_db) return hi->second; // stored point, bit-exact
    auto lo = std::prev(hi);
    const double t = (snr_db - lo->first) / (hi->first - lo->first);
    if (lo->second <= 0.0 || hi->second <= 0.0) {
        // log10 undefined at 0; fall back to linear, still monotone.
        return lo->second + t * (hi->second - lo->second);
    }
    return std::pow(10.0, std::log10(lo->second) + t * (std::log10(hi->second) - std::log10(lo->second)));
}

double PerTable::lookup(const std::string& code_id, double snr_db,
                        const InterferenceConfig& config) const {
    if (all_zero_) return 0.0;
    auto code_it = entries_.find(code_id);
    if (code_it == entries_.end())
        throw std::invalid_argument("per table: unknown code '" + code_id + "'");
    const auto key = config.with_erasures(erasure_threshold_);
    const auto& configs = code_it->second;
    auto cfg_it = configs.find(key.counts());
    if (cfg_it != configs.end())
        return interpolate(cfg_it->second, snr_db);
    // Fallback: tightest conservative bound among dominating configs.
    double best = 1.0;
    bool found = false;
    for (const auto& [stored, curve] : configs) {
        if (stored.size() != key.size()) continue;
        if (!InterferenceConfig(stored).dominates(key)) continue;
        const double per = interpolate(curve, snr_db);
        if (!found || per < best) best = per;
        found = true;
    }
    return found ? best : 1.0;
}

PerTable PerTable::ideal() {
    PerTable t;
    t.all_zero_ = true;
    return t;
}

std::vector<PerTable::Row> PerTable::rows() const {
    std::vector<Row> out;
    for (const auto& [code, configs] : entries_)
        for (const auto& [config, curve] : configs)
            for (const auto& [snr, per] : curve)
                out.push_back({code, snr, config, per});
    return out;
}

PerTable builtin_anchor_table() {
    PerTable t(2);
    // All quoted at Es/N0 = 5 dB; "< 1e-4" stored as 1e-4.
    t.insert("rm14_64", 5.0, InterferenceConfig({0}), 1e-4);
    t.insert("rm14_64", 5.0, InterferenceConfig({1}), 0.109);
    t.insert("turbo_r16", 5.0, InterferenceConfig({1, 2, 3}), 0.02);
    t.insert("turbo_r14", 5.0, InterferenceConfig({0, 2}), 1e-4);
    t.insert("turbo_r14", 5.0, InterferenceConfig({1, 1}), 1e-4);
    t.validate();
    return t;
}

PerTable collision_channel_table(const std::vector<std::string>& code_ids, int max_degree) {
    PerTable t(2);
    for (const auto& code : code_ids) {
        std::vector<int> zeros;
        for (int d = 1; d <= max_degree; ++d) {
            zeros.push_back(0);
            t.insert(code, 0.0, InterferenceConfig(zeros), 0.0);
        }
    }
    t.validate();
    return t;
}

PerTable load_per_table(const std::filesystem::path& path, int erasure_threshold) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("per table: cannot open " + path.string());
    PerTable t(erasure_threshold);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        std::string code_id, snr_text, config_text_, per_text;
        if (!std::getline(row, code_id, ',') || !std::getline(row, snr_text, ',') ||
            !std::getline(row, config_text_, ',') || !std::getline(row, per_text))
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                        ": expected code_id,snr_db,config,per");
        try {
            std::vector<int> components;
            std::istringstream cfg(config_text_);
            std::string comp;
            while (std::getline(cfg, comp, '|')) {
                if (comp == "e" || comp == "E")
                    components.push_back(InterferenceConfig::kErased);
                else
                    components.push_back(std::stoi(comp));
            }
            t.insert(code_id, std::stod(snr_text), InterferenceConfig(std::move(components)),
                     std::stod(per_text));
        } catch (const std::exception& e) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    t.validate();
    return t;
}

void save_per_table(const PerTable& table, const std::filesystem::path& path,
                    const std::string& header_comment) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("per table: cannot write " + path.string());
    if (!header_comment.empty()) {
        std::istringstream lines(header_comment);
        std::string line;
        while (std::getline(lines, line)) out << "# " << line << '\n';
    }
    out << std::setprecision(17);
    for (const auto& row : table.rows()) {
        out << row.code_id << ',' << row.snr_db << ',';
        for (std::size_t i = 0; i < row.config.size(); ++i) {
            if (i) out << '|';
            if (row.config[i] == InterferenceConfig::kErased)
                out << 'e';
            else
                out << row.config[i];
        }
        out << ',' << row.per << '\n';
    }
}

double capacity_margin(const ParametricCode& code, double snr_db, const std::vector<int>& config) {
    const double snr = std::pow(10.0, snr_db / 10.0);
    double capacity_sum = 0.0;
    for (int n : config) {
        if (n == InterferenceConfig::kErased) continue;
        const double sinr = snr / (1.0 + n * snr);
        capacity_sum += std::min(std::log2(1.0 + sinr), code.capacity_clamp);
    }
    return capacity_sum / static_cast<double>(config.size()) - code.rate_bits_per_symbol;
}

double parametric_per(const ParametricCode& code, double snr_db, const std::vector<int>& config) {
    const double margin = capacity_margin(code, snr_db, config);
    const double log_per = code.a - code.b * margin;
    return std::clamp(std::pow(10.0, log_per), 1e-9, 1.0);
}

void calibrate(std::vector<ParametricCode*> family,
               const ParametricCode& code1, double snr1, const std::vector<int>& config1, double per1,
               const ParametricCode& code2, double snr2, const std::vector<int>& config2, double per2) {
    const double m1 = capacity_margin(code1, snr1, config1);
    const double m2 = capacity_margin(code2, snr2, config2);
    const double b = (std::log10(per2) - std::log10(per1)) / (m1 - m2);
    const double a = std::log10(per1) + b * m1;
    for (ParametricCode* code : family) {
        code->a = a;
        code->b = b;
    }
}

std::vector<ParametricCode> default_parametric_codes() {
    std::vector<ParametricCode> codes = {
        {"rm14_64", 14.0 / 64.0, 1.0},
        {"turbo_r12", 1.0, 2.0},
        {"turbo_r14", 0.5, 2.0},
        {"turbo_r16", 1.0 / 3.0, 2.0},
    };
    auto& rm = codes[0];
    calibrate({&rm}, rm, 5.0, {1}, 0.109, rm, 5.0, {0}, 1e-4);
    const int e = InterferenceConfig::kErased;
    calibrate({&codes[1], &codes[2], &codes[3]},
              codes[3], 5.0, {1, 2, e}, 0.02,
              codes[2], 5.0, {1, 1}, 1e-4);
    return codes;
}

namespace {

void enumerate_configs(int length, int first, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
    static const int values[] = {0, 1, 2, InterferenceConfig::kErased};
    if (static_cast<int>(current.size()) == length) {
        out.push_back(current);
        return;
    }
    for (int i = first; i < 4; ++i) {
        current.push_back(values[i]);
        enumerate_configs(length, i, current, out);
        current.pop_back();
    }
}

} // namespace

PerTable make_parametric_table(const std::vector<double>& snr_grid, int erasure_threshold) {
    const auto codes = default_parametric_codes();
    PerTable t(erasure_threshold);
    for (double snr : snr_grid) {
        t.insert("rm14_64", snr, InterferenceConfig({0}), parametric_per(codes[0], snr, {0}));
        t.insert("rm14_64", snr, InterferenceConfig({1}), parametric_per(codes[0], snr, {1}));
        t.insert("rm14_64", snr, InterferenceConfig({2}), parametric_per(codes[0], snr, {2}));
        for (int d = 1; d <= 3; ++d) {
            const auto& code = codes[d];
            std::vector<std::vector<int>> configs;
            std::vector<int> scratch;
            enumerate_configs(d, 0, scratch, configs);
            for (const auto& config : configs)
                t.insert(code.code_id, snr, InterferenceConfig(config), parametric_per(code, snr, config));
        }
    }
    t.validate();
    return t;
}

} // namespace musca
