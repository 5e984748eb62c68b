#include "musca/decoder.hpp"

#include <algorithm>
#include <stdexcept>

namespace musca {

SicDecoder::SicDecoder(Frame& frame, const PerTable& per, double snr_db,
                       const DecodePolicy& policy, Rng& rng)
    : frame_(frame), per_(per), snr_db_(snr_db), policy_(policy), rng_(rng) {
    sig_attempted_count_.resize(frame.users.size());
    replica_attempted_.resize(frame.users.size());
    data_attempted_config_.resize(frame.users.size());
    for (std::size_t i = 0; i < frame.users.size(); ++i) {
        sig_attempted_count_[i].assign(frame.users[i].slots.size(), -1);
        replica_attempted_[i].assign(frame.users[i].slots.size(), false);
    }
}

bool SicDecoder::draw_success(double per) {
    if (policy_.force_success) return true;
    return rng_.bernoulli(1.0 - per);
}

std::vector<int> SicDecoder::locate_pass() {
    std::vector<int> newly_located;
    // Degree-1 users have an empty signalling field and are self-locating.
    for (auto& user : frame_.users) {
        if (user.located || user.degree != 1) continue;
        user.located = true;
        report_.located.insert(user.user_id);
        report_.events.push_back({Phase::locate, user.user_id,
                                  config_of(user, frame_.state, Layer::signalling), 0.0, true});
        newly_located.push_back(user.user_id);
    }
    for (;;) {
        // Unlocated burst with the fewest signalling-layer interferers,
        // ties broken by (user_id, slot) for replay determinism.
        int best_user = -1, best_burst = -1, best_count = 0;
        double best_per = 1.0;
        for (std::size_t ui = 0; ui < frame_.users.size(); ++ui) {
            const auto& user = frame_.users[ui];
            if (user.located || user.degree < 2) continue;
            for (std::size_t bi = 0; bi < user.slots.size(); ++bi) {
                const int count =
                    frame_.state.interferers(user.user_id, user.slots[bi], Layer::signalling);
                if (count > policy_.signalling_max_interferers) continue;
                if (policy_.retry_on_improvement_only && sig_attempted_count_[ui][bi] >= 0 &&
                    count >= sig_attempted_count_[ui][bi])
                    continue;
                if (best_user >= 0 && count >= best_count) continue;
                const double per =
                    per_.lookup(user.profile.signalling_code_id, snr_db_, InterferenceConfig({count}));
                if (per >= 1.0) continue; // undecodable, attempting would be a wasted draw
                best_user = static_cast<int>(ui);
                best_burst = static_cast<int>(bi);
                best_count = count;
                best_per = per;
            }
        }
        if (best_user < 0) break;
        auto& user = frame_.users[best_user];
        const bool success = draw_success(best_per);
        report_.events.push_back(
            {Phase::locate, user.user_id, InterferenceConfig({best_count}), best_per, success});
        if (success) {
            user.located = true;
            report_.located.insert(user.user_id);
            frame_.state.subtract(user, Layer::signalling);
            newly_located.push_back(user.user_id);
        } else {
            sig_attempted_count_[best_user][best_burst] = best_count;
        }
    }
    return newly_located;
}

std::vector<int> SicDecoder::data_pass() {
    std::vector<int> newly_decoded;
    for (;;) {
        // Located, undecoded user with the lowest PER over its current data
        // configuration; ties broken by lowest user_id.
        int best_user = -1;
        double best_per = 1.0;
        for (std::size_t ui = 0; ui < frame_.users.size(); ++ui) {
            const auto& user = frame_.users[ui];
            if (!user.located || user.decoded) continue;
            const auto config = config_of(user, frame_.state, Layer::data);
            const auto canonical = config.with_erasures(per_.erasure_threshold());
            if (policy_.retry_on_improvement_only && data_attempted_config_[ui] &&
                !canonical.strictly_improves_on(*data_attempted_config_[ui]))
                continue;
            const double per = per_.lookup(user.profile.code_id, snr_db_, config);
            if (per >= 1.0) continue;
            if (best_user < 0 || per < best_per) {
                best_user = static_cast<int>(ui);
                best_per = per;
            }
        }
        if (best_user < 0) break;
        auto& user = frame_.users[best_user];
        const auto config = config_of(user, frame_.state, Layer::data);
        const bool success = draw_success(best_per);
        report_.events.push_back({Phase::data, user.user_id, config, best_per, success});
        if (success) {
            user.decoded = true;
            report_.decoded.insert(user.user_id);
            frame_.state.subtract(user, Layer::data);
            newly_decoded.push_back(user.user_id);
        } else {
            data_attempted_config_[best_user] = config.with_erasures(per_.erasure_threshold());
        }
    }
    return newly_decoded;
}

std::vector<int> SicDecoder::replica_pass() {
    std::vector<int> newly_decoded;
    for (;;) {
        // Any clean replica decodes the whole user.
        int best_user = -1, best_burst = -1;
        double best_per = 1.0;
        for (std::size_t ui = 0; ui < frame_.users.size(); ++ui) {
            const auto& user = frame_.users[ui];
            if (user.decoded) continue;
            for (std::size_t bi = 0; bi < user.slots.size(); ++bi) {
                if (frame_.state.interferers(user.user_id, user.slots[bi], Layer::data) != 0)
                    continue;
                if (policy_.retry_on_improvement_only && replica_attempted_[ui][bi]) continue;
                const double per =
                    per_.lookup(user.profile.code_id, snr_db_, InterferenceConfig({0}));
                if (per >= 1.0) continue;
                best_user = static_cast<int>(ui);
                best_burst = static_cast<int>(bi);
                best_per = per;
                break;
            }
            if (best_user >= 0) break;
        }
        if (best_user < 0) break;
        auto& user = frame_.users[best_user];
        const bool success = draw_success(best_per);
        report_.events.push_back(
            {Phase::data, user.user_id, InterferenceConfig({0}), best_per, success});
        if (success) {
            user.located = true;
            user.decoded = true;
            report_.located.insert(user.user_id);
            report_.decoded.insert(user.user_id);
            frame_.state.subtract(user, Layer::data);
            newly_decoded.push_back(user.user_id);
        } else {
            replica_attempted_[best_user][best_burst] = true;
        }
    }
    return newly_decoded;
}

DecodeReport SicDecoder::run() {
    if (policy_.mode == DecodeMode::musca) {
        for (;;) {
            ++report_.iterations;
            const auto located = locate_pass();
            const auto decoded = data_pass();
            if (located.empty() && decoded.empty()) break;
        }
    } else {
        for (;;) {
            ++report_.iterations;
            if (replica_pass().empty()) break;
        }
    }
    report_.deadlock = std::any_of(frame_.users.begin(), frame_.users.end(),
                                   [](const UserTransmission& u) { return !u.decoded; });
    return report_;
}

DecodeReport decode_frame(Frame& frame, const PerTable& per, double snr_db,
                          const DecodePolicy& policy, Rng& rng) {
    return SicDecoder(frame, per, snr_db, policy, rng).run();
}

} // namespace musca
