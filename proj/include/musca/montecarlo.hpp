#pragma once

#include <cstdint>
#include <vector>

#include "musca/decoder.hpp"
#include "musca/degree_distribution.hpp"
#include "musca/per_table.hpp"

namespace musca {

struct TrialPlan {
    int n_slots = 100;
    int n_users = 0;
    DegreeDistribution dist = DegreeDistribution::single(1);
    ProfileMap profiles = default_profiles();
    double snr_db = 5.0;
    int trials = 10000;
    std::uint64_t master_seed = 1;
    DecodePolicy policy;
    /// Worker threads; 0 uses the hardware concurrency. Results are
    /// independent of the worker count.
    int workers = 1;
    /// Stop early once plr_ci95 < 0.1 * plr, checked at fixed batch
    /// boundaries so the stopping point does not depend on scheduling.
    bool stop_on_ci = false;
    int ci_batch = 1000;
};

struct EstimateResult {
    double g = 0.0;
    double snr_db = 0.0;
    double plr = 0.0;
    double plr_ci95 = 0.0; // half-width, normal approximation
    double throughput = 0.0;
    long trials_run = 0;
    long decoded_total = 0;
    long offered_total = 0;
};

/// Average packet transmissions per slot, N_u / N_s.
double normalized_load(int n_users, int n_slots);

/// G * e^{-G}, the slotted-ALOHA closed form.
double sa_analytic_throughput(double g);

/// max(T) * R_d * N_b * log2(M) bits per symbol.
double spectral_efficiency(double max_t, double r_d, int n_b, int m);

/// Run `plan.trials` independent frames, each seeded from
/// (master_seed, trial_index). PLR is pooled packet loss over all users in
/// all trials; throughput = G * (1 - PLR) exactly.
EstimateResult estimate(const TrialPlan& plan, const PerTable& per);

/// One estimate per load value, with N_u = round(g * N_s).
std::vector<EstimateResult> sweep_load(const TrialPlan& plan, const PerTable& per,
                                       const std::vector<double>& g_values);

struct SnrSweepRow {
    double snr_db = 0.0;
    std::vector<EstimateResult> by_g;
    double best_g = 0.0;
    double best_t = 0.0;
};

/// Cartesian sweep; each row also reports the argmax-over-G throughput.
std::vector<SnrSweepRow> sweep_snr(const TrialPlan& plan, const PerTable& per,
                                   const std::vector<double>& snr_values,
                                   const std::vector<double>& g_values);

/// Evenly spaced grid helper, inclusive of both ends.
std::vector<double> grid(double first, double last, double step);

} // namespace musca
