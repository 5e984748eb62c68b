#pragma once

#include <optional>
#include <set>
#include <vector>

#include "musca/frame.hpp"
#include "musca/per_table.hpp"
#include "musca/rng.hpp"

namespace musca {

enum class DecodeMode { musca, crdsa, irsa, sa };

struct DecodePolicy {
    DecodeMode mode = DecodeMode::musca;
    /// Signalling decoding is attempted only on bursts with at most this
    /// many signalling-layer interferers.
    int signalling_max_interferers = 1;
    /// Re-attempt a failed decode only after its interference configuration
    /// strictly improves. Disabling this allows unlimited retries.
    bool retry_on_improvement_only = true;
    /// Diagnostic: every attempted draw succeeds. Selection order is
    /// unchanged, so this exposes the deterministic event sequence.
    bool force_success = false;
};

enum class Phase { locate, data };

struct DecodeEvent {
    Phase phase;
    int user_id;
    InterferenceConfig config; // configuration used for the PER lookup
    double per_used;
    bool success;
};

struct DecodeReport {
    std::set<int> decoded;
    std::set<int> located;
    std::vector<DecodeEvent> events;
    bool deadlock = false;
    int iterations = 0; // locate+data alternations run
};

/// Two-phase iterative SIC decoder. In musca mode, alternates a signalling
/// locate pass and a data pass to fixpoint; in crdsa/irsa/sa modes each
/// burst is a full replica and a user decodes from any clean burst, after
/// which all its replicas are subtracted. Terminates with deadlock when a
/// full alternation makes no progress and undecoded users remain.
class SicDecoder {
public:
    SicDecoder(Frame& frame, const PerTable& per, double snr_db, const DecodePolicy& policy, Rng& rng);

    DecodeReport run();

    /// One signalling pass to stall; returns newly located user ids.
    std::vector<int> locate_pass();
    /// One data pass to stall; returns newly decoded user ids.
    std::vector<int> data_pass();

    const DecodeReport& report() const { return report_; }

private:
    bool draw_success(double per);
    std::vector<int> replica_pass(); // crdsa/irsa/sa decode rule

    Frame& frame_;
    const PerTable& per_;
    double snr_db_;
    DecodePolicy policy_;
    Rng& rng_;
    DecodeReport report_;
    // Retry bookkeeping: per-burst last attempted signalling interferer
    // count, per-user last attempted data configuration.
    std::vector<std::vector<int>> sig_attempted_count_; // [user][burst index], -1 = never
    std::vector<std::optional<InterferenceConfig>> data_attempted_config_;
    std::vector<std::vector<bool>> replica_attempted_;
};

DecodeReport decode_frame(Frame& frame, const PerTable& per, double snr_db,
                          const DecodePolicy& policy, Rng& rng);

} // namespace musca
