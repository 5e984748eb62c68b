#include "musca/degree_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace musca {

DegreeDistribution::DegreeDistribution(std::vector<DegreeEntry> entries) {
    if (entries.empty())
        throw std::invalid_argument("degree distribution: no entries");
    std::sort(entries.begin(), entries.end(),
              [](const DegreeEntry& a, const DegreeEntry& b) { return a.degree < b.degree; });
    double sum = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (e.degree < 1)
            throw std::invalid_argument("degree distribution: degree must be >= 1");
        if (i > 0 && entries[i - 1].degree == e.degree)
            throw std::invalid_argument("degree distribution: duplicate degree " + std::to_string(e.degree));
        if (e.probability < 0.0)
            throw std::invalid_argument("degree distribution: negative probability");
        sum += e.probability;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("degree distribution: probabilities sum to " + std::to_string(sum));
    for (const auto& e : entries) {
        if (e.probability == 0.0)
            continue;
        entries_.push_back(e);
        cumulative_.push_back((cumulative_.empty() ? 0.0 : cumulative_.back()) + e.probability);
    }
    if (entries_.empty())
        throw std::invalid_argument("degree distribution: empty support");
}

double DegreeDistribution::mean_degree() const {
    double m = 0.0;
    for (const auto& e : entries_) m += e.degree * e.probability;
    return m;
}

double DegreeDistribution::probability_of(int degree) const {
    for (const auto& e : entries_)
        if (e.degree == degree) return e.probability;
    return 0.0;
}

int DegreeDistribution::sample(Rng& rng) const {
    const double u = rng.uniform01();
    for (std::size_t i = 0; i + 1 < cumulative_.size(); ++i)
        if (u < cumulative_[i]) return entries_[i].degree;
    return entries_.back().degree; // absorbs rounding in the final sum
}

DegreeDistribution DegreeDistribution::single(int degree) {
    return DegreeDistribution({{degree, 1.0}});
}

DegreeDistribution DegreeDistribution::parse(std::string_view text) {
    std::vector<DegreeEntry> entries;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("degree distribution: expected 'degree:prob', got '" + item + "'");
        entries.push_back({std::stoi(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
    }
    return DegreeDistribution(std::move(entries));
}

std::string DegreeDistribution::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ',';
        out << entries_[i].degree << ':' << entries_[i].probability;
    }
    return out.str();
}

bool DegreeDistribution::degrees_equal(const DegreeDistribution& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].degree != other.entries_[i].degree) return false;
    return true;
}

int CodeProfile::data_field_symbols() const {
    if (degree < 1 || info_bits < 1 || modulation_order < 2 || data_rate <= 0.0)
        throw std::invalid_argument("code profile: invalid parameters");
    const double bits_per_symbol = std::log2(static_cast<double>(modulation_order));
    const double symbols = info_bits / (data_rate * degree * bits_per_symbol);
    const double rounded = std::round(symbols);
    if (rounded < 1.0 || std::abs(symbols - rounded) > 1e-6)
        throw std::invalid_argument("code profile: data field length is not a positive integer");
    return static_cast<int>(rounded);
}

ProfileMap default_profiles() {
    ProfileMap profiles;
    const int k = 456;
    const char* code_ids[] = {"turbo_r12", "turbo_r14", "turbo_r16"};
    for (int d = 1; d <= 3; ++d) {
        CodeProfile p;
        p.degree = d;
        p.data_rate = 1.0 / (2.0 * d);
        p.info_bits = k;
        p.modulation_order = 4;
        p.signalling_rate = d > 1 ? 14.0 / 64.0 : 1.0;
        p.code_id = code_ids[d - 1];
        p.signalling_code_id = d > 1 ? "rm14_64" : "";
        profiles.emplace(d, std::move(p));
    }
    return profiles;
}

} // namespace musca
