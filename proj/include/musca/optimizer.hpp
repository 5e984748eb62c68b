#pragma once

#include <vector>

#include "musca/montecarlo.hpp"

namespace musca {

struct SearchSpec {
    std::vector<int> degrees = {1, 2, 3};
    double step = 0.05; // must divide 1 within 1e-9
    double snr_db = 8.0;
    int n_slots = 100;
    int trials_per_candidate = 2000;
    std::vector<double> g_grid = grid(0.5, 1.8, 0.05);
    std::uint64_t master_seed = 1;
    DecodePolicy policy;
    ProfileMap profiles = default_profiles();
};

/// All probability vectors on the simplex grid with the given step, each
/// summing to 1 (compositions of 1/step over the degree set).
std::vector<DegreeDistribution> enumerate_simplex(const std::vector<int>& degrees, double step);

struct CandidateResult {
    DegreeDistribution dist = DegreeDistribution::single(1);
    std::vector<double> probabilities; // aligned with SearchSpec::degrees, zeros kept
    double peak_throughput = 0.0;
    double peak_g = 0.0;
};

struct OptimizeResult {
    CandidateResult best;
    std::vector<CandidateResult> ranking; // sorted by descending peak throughput
};

/// Exhaustive grid search: peak throughput over the load grid for every
/// candidate distribution. Ties break toward the lower mean degree
/// (cheaper signalling).
OptimizeResult optimize(const SearchSpec& spec, const PerTable& per);

} // namespace musca
