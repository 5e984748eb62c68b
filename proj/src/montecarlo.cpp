#include "musca/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace musca {

double normalized_load(int n_users, int n_slots) {
    if (n_slots < 1)
        throw std::invalid_argument("normalized_load: N_s must be >= 1");
    return static_cast<double>(n_users) / n_slots;
}

double sa_analytic_throughput(double g) {
    if (g < 0.0)
        throw std::invalid_argument("sa_analytic_throughput: negative load");
    return g * std::exp(-g);
}

double spectral_efficiency(double max_t, double r_d, int n_b, int m) {
    if (m < 2)
        throw std::invalid_argument("spectral_efficiency: modulation order must be >= 2");
    return max_t * r_d * n_b * std::log2(static_cast<double>(m));
}

namespace {

long run_trials(const TrialPlan& plan, const PerTable& per, long first, long last) {
    long decoded = 0;
    for (long t = first; t < last; ++t) {
        Rng rng(derive_seed(plan.master_seed, static_cast<std::uint64_t>(t)));
        Frame frame = build_frame(plan.n_users, plan.n_slots, plan.dist, plan.profiles, rng);
        const auto report = decode_frame(frame, per, plan.snr_db, plan.policy, rng);
        decoded += static_cast<long>(report.decoded.size());
    }
    return decoded;
}

long run_batch(const TrialPlan& plan, const PerTable& per, long first, long last, int workers) {
    if (workers <= 1 || last - first < 2 * workers)
        return run_trials(plan, per, first, last);
    // Static partition; decoded counts are summed, so the reduction is
    // exact and order-independent.
    std::vector<long> partial(workers, 0);
    std::vector<std::thread> threads;
    const long span = last - first;
    for (int w = 0; w < workers; ++w) {
        const long lo = first + span * w / workers;
        const long hi = first + span * (w + 1) / workers;
        threads.emplace_back([&, w, lo, hi] { partial[w] = run_trials(plan, per, lo, hi); });
    }
    long decoded = 0;
    for (int w = 0; w < workers; ++w) {
        threads[w].join();
        decoded += partial[w];
    }
    return decoded;
}

EstimateResult finalize(const TrialPlan& plan, long trials_run, long decoded) {
    EstimateResult r;
    r.g = normalized_load(plan.n_users, plan.n_slots);
    r.snr_db = plan.snr_db;
    r.trials_run = trials_run;
    r.decoded_total = decoded;
    r.offered_total = trials_run * static_cast<long>(plan.n_users);
    if (r.offered_total > 0) {
        r.plr = 1.0 - static_cast<double>(decoded) / static_cast<double>(r.offered_total);
        r.plr_ci95 = 1.96 * std::sqrt(r.plr * (1.0 - r.plr) / static_cast<double>(r.offered_total));
    }
    r.throughput = r.g * (1.0 - r.plr);
    return r;
}

} // namespace

EstimateResult estimate(const TrialPlan& plan, const PerTable& per) {
    if (plan.trials < 1)
        throw std::invalid_argument("estimate: trials must be >= 1");
    if (plan.n_slots < 1)
        throw std::invalid_argument("estimate: N_s must be >= 1");
    int workers = plan.workers;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    long decoded = 0;
    long done = 0;
    const long total = plan.trials;
    const long batch = plan.stop_on_ci ? std::max(1, plan.ci_batch) : total;
    while (done < total) {
        const long next = std::min(total, done + batch);
        decoded += run_batch(plan, per, done, next, workers);
        done = next;
        if (plan.stop_on_ci) {
            const auto r = finalize(plan, done, decoded);
            if (r.plr > 0.0 && r.plr_ci95 < 0.1 * r.plr) break;
        }
    }
    return finalize(plan, done, decoded);
}

std::vector<EstimateResult> sweep_load(const TrialPlan& plan, const PerTable& per,
                                       const std::vector<double>& g_values) {
    if (g_values.empty())
        throw std::invalid_argument("sweep_load: empty load grid");
    std::vector<EstimateResult> out;
    out.reserve(g_values.size());
    for (double g : g_values) {
        TrialPlan point = plan;
        point.n_users = static_cast<int>(std::lround(g * plan.n_slots));
        out.push_back(estimate(point, per));
    }
    return out;
}

std::vector<SnrSweepRow> sweep_snr(const TrialPlan& plan, const PerTable& per,
                                   const std::vector<double>& snr_values,
                                   const std::vector<double>& g_values) {
    if (snr_values.empty() || g_values.empty())
        throw std::invalid_argument("sweep_snr: empty grid");
    std::vector<SnrSweepRow> out;
    for (double snr : snr_values) {
        TrialPlan point = plan;
        point.snr_db = snr;
        SnrSweepRow row;
        row.snr_db = snr;
        row.by_g = sweep_load(point, per, g_values);
        for (const auto& r : row.by_g) {
            if (r.throughput > row.best_t) {
                row.best_t = r.throughput;
                row.best_g = r.g;
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<double> grid(double first, double last, double step) {
    if (step <= 0.0)
        throw std::invalid_argument("grid: step must be positive");
    std::vector<double> out;
    const int n = static_cast<int>(std::floor((last - first) / step + 1e-9));
    for (int i = 0; i <= n; ++i) out.push_back(first + i * step);
    return out;
}

} // namespace musca
