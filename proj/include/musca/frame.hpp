#pragma once

#include <limits>
#include <string>
#include <vector>

#include "musca/degree_distribution.hpp"
#include "musca/rng.hpp"

namespace musca {

/// Multiset of per-burst interferer counts for one user, canonicalized by
/// ascending sort so [2 1 3] and [1 2 3] compare equal. A component may be
/// the erased marker, meaning the burst carries no usable signal.
class InterferenceConfig {
public:
    static constexpr int kErased = std::numeric_limits<int>::max();

    explicit InterferenceConfig(std::vector<int> counts);

    const std::vector<int>& counts() const { return counts_; }
    std::size_t size() const { return counts_.size(); }

    /// Replace every component strictly greater than the threshold by the
    /// erased marker (already-erased components stay erased).
    InterferenceConfig with_erasures(int threshold) const;

    /// Componentwise >= against another config of the same length.
    bool dominates(const InterferenceConfig& other) const;

    /// Componentwise <= with at least one strict decrease. Used by the
    /// decoder's retry rule.
    bool strictly_improves_on(const InterferenceConfig& previous) const;

    bool operator==(const InterferenceConfig& other) const { return counts_ == other.counts_; }
    bool operator<(const InterferenceConfig& other) const { return counts_ < other.counts_; }

    std::string to_string() const; // "[1 2 e]"

private:
    std::vector<int> counts_; // sorted ascending, erased marker sorts last
};

/// One user's placement within a frame.
struct UserTransmission {
    int user_id = 0;
    int degree = 0;
    std::vector<int> slots; // distinct, sorted
    CodeProfile profile;
    bool located = false;
    bool decoded = false;
};

enum class Layer { signalling, data };

/// Per-slot interferer ledgers, kept separately for signalling fields and
/// data fields: the decoder subtracts signalling fields at location time
/// while the data fields stay collided.
class FrameState {
public:
    explicit FrameState(int n_slots);

    int n_slots() const { return static_cast<int>(data_.size()); }

    void place(int user_id, int slot, Layer layer);
    bool contains(int user_id, int slot, Layer layer) const;
    int occupancy(int slot, Layer layer) const;

    /// Interferers of `user_id` on `slot`: occupancy minus the user itself
    /// if present.
    int interferers(int user_id, int slot, Layer layer) const;

    /// Remove the user's contribution from the layer on every one of its
    /// slots. Subtracting an absent user is an internal invariant violation.
    void subtract(const UserTransmission& user, Layer layer);

    /// Total interferer mass, sum of set sizes over both layers.
    long total_mass() const;

    bool operator==(const FrameState& other) const { return sig_ == other.sig_ && data_ == other.data_; }

private:
    std::vector<int>& slot_set(int slot, Layer layer);
    const std::vector<int>& slot_set(int slot, Layer layer) const;

    // Small sorted vectors; slot occupancies stay in the single digits.
    std::vector<std::vector<int>> sig_;
    std::vector<std::vector<int>> data_;
};

struct Frame {
    FrameState state;
    std::vector<UserTransmission> users;
};

/// Draw each user's degree from the distribution and place its bursts on a
/// uniform random subset of distinct slots. Both layers of the FrameState
/// reflect all placements, except that degree-1 users carry no signalling
/// field and therefore never occupy the signalling layer.
Frame build_frame(int n_users, int n_slots, const DegreeDistribution& dist,
                  const ProfileMap& profiles, Rng& rng);

/// Per-burst count of other users still present in the chosen layer on the
/// user's slots, canonicalized.
InterferenceConfig config_of(const UserTransmission& user, const FrameState& frame, Layer layer);

/// Coded signalling-field length in bits: ceil(log2(N_s)) pointer bits per
/// complementary burst, expanded by the signalling code rate.
int signalling_length_bits(int n_slots, int degree, double signalling_rate);

} // namespace musca
