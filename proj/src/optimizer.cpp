#include "musca/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace musca {

namespace {

void compositions(int remaining, std::size_t index, std::vector<int>& counts,
                  std::vector<std::vector<int>>& out) {
    if (index + 1 == counts.size()) {
        counts[index] = remaining;
        out.push_back(counts);
        return;
    }
    for (int c = 0; c <= remaining; ++c) {
        counts[index] = c;
        compositions(remaining - c, index + 1, counts, out);
    }
}

} // namespace

std::vector<DegreeDistribution> enumerate_simplex(const std::vector<int>& degrees, double step) {
    if (degrees.empty())
        throw std::invalid_argument("enumerate_simplex: empty degree set");
    if (step <= 0.0 || step > 1.0)
        throw std::invalid_argument("enumerate_simplex: step must be in (0, 1]");
    const double n_real = 1.0 / step;
    const int n = static_cast<int>(std::lround(n_real));
    if (std::abs(n_real - n) > 1e-9 * n_real)
        throw std::invalid_argument("enumerate_simplex: step must divide 1");
    std::vector<std::vector<int>> count_vectors;
    std::vector<int> counts(degrees.size(), 0);
    compositions(n, 0, counts, count_vectors);
    std::vector<DegreeDistribution> out;
    out.reserve(count_vectors.size());
    for (const auto& cv : count_vectors) {
        std::vector<DegreeEntry> entries;
        for (std::size_t i = 0; i < degrees.size(); ++i)
            entries.push_back({degrees[i], static_cast<double>(cv[i]) / n});
        out.push_back(DegreeDistribution(std::move(entries)));
    }
    return out;
}

OptimizeResult optimize(const SearchSpec& spec, const PerTable& per) {
    const auto candidates = enumerate_simplex(spec.degrees, spec.step);
    OptimizeResult result;
    for (const auto& dist : candidates) {
        TrialPlan plan;
        plan.n_slots = spec.n_slots;
        plan.dist = dist;
        plan.profiles = spec.profiles;
        plan.snr_db = spec.snr_db;
        plan.trials = spec.trials_per_candidate;
        plan.master_seed = spec.master_seed;
        plan.policy = spec.policy;
        CandidateResult cand{dist, {}, 0.0, 0.0};
        for (int d : spec.degrees) cand.probabilities.push_back(dist.probability_of(d));
        for (const auto& point : sweep_load(plan, per, spec.g_grid)) {
            if (point.throughput > cand.peak_throughput) {
                cand.peak_throughput = point.throughput;
                cand.peak_g = point.g;
            }
        }
        result.ranking.push_back(std::move(cand));
    }
    std::stable_sort(result.ranking.begin(), result.ranking.end(),
                     [](const CandidateResult& a, const CandidateResult& b) {
                         if (a.peak_throughput != b.peak_throughput)
                             return a.peak_throughput > b.peak_throughput;
                         return a.dist.mean_degree() < b.dist.mean_degree();
                     });
    result.best = result.ranking.front();
    return result;
}

} // namespace musca
