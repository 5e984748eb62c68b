#include "musca/frame.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace musca {

InterferenceConfig::InterferenceConfig(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty())
        throw std::invalid_argument("interference config: empty (degree 0)");
    for (int c : counts_)
        if (c < 0)
            throw std::invalid_argument("interference config: negative count");
    std::sort(counts_.begin(), counts_.end());
}

InterferenceConfig InterferenceConfig::with_erasures(int threshold) const {
    std::vector<int> out = counts_;
    for (int& c : out)
        if (c > threshold) c = kErased;
    return InterferenceConfig(std::move(out));
}

bool InterferenceConfig::dominates(const InterferenceConfig& other) const {
    if (counts_.size() != other.counts_.size()) return false;
    for (std::size_t i = 0; i < counts_.size(); ++i)
        if (counts_[i] < other.counts_[i]) return false;
    return true;
}

bool InterferenceConfig::strictly_improves_on(const InterferenceConfig& previous) const {
    if (counts_.size() != previous.counts_.size()) return false;
    bool strict = false;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] > previous.counts_[i]) return false;
        if (counts_[i] < previous.counts_[i]) strict = true;
    }
    return strict;
}

std::string InterferenceConfig::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) out << ' ';
        if (counts_[i] == kErased)
            out << 'e';
        else
            out << counts_[i];
    }
    out << ']';
    return out.str();
}

FrameState::FrameState(int n_slots) {
    if (n_slots < 0)
        throw std::invalid_argument("frame state: negative slot count");
    sig_.resize(n_slots);
    data_.resize(n_slots);
}

std::vector<int>& FrameState::slot_set(int slot, Layer layer) {
    return layer == Layer::signalling ? sig_.at(slot) : data_.at(slot);
}

const std::vector<int>& FrameState::slot_set(int slot, Layer layer) const {
    return layer == Layer::signalling ? sig_.at(slot) : data_.at(slot);
}

void FrameState::place(int user_id, int slot, Layer layer) {
    auto& set = slot_set(slot, layer);
    auto it = std::lower_bound(set.begin(), set.end(), user_id);
    if (it != set.end() && *it == user_id)
        throw std::logic_error("frame state: user already placed on slot");
    set.insert(it, user_id);
}

bool FrameState::contains(int user_id, int slot, Layer layer) const {
    const auto& set = slot_set(slot, layer);
    return std::binary_search(set.begin(), set.end(), user_id);
}

int FrameState::occupancy(int slot, Layer layer) const {
    return static_cast<int>(slot_set(slot, layer).size());
}

int FrameState::interferers(int user_id, int slot, Layer layer) const {
    const auto& set = slot_set(slot, layer);
    int n = static_cast<int>(set.size());
    return contains(user_id, slot, layer) ? n - 1 : n;
}

void FrameState::subtract(const UserTransmission& user, Layer layer) {
    for (int slot : user.slots) {
        auto& set = slot_set(slot, layer);
        auto it = std::lower_bound(set.begin(), set.end(), user.user_id);
        if (it == set.end() || *it != user.user_id)
            throw std::logic_error("frame state: double subtraction of user " +
                                   std::to_string(user.user_id));
        set.erase(it);
    }
}

long FrameState::total_mass() const {
    long mass = 0;
    for (const auto& s : sig_) mass += static_cast<long>(s.size());
    for (const auto& s : data_) mass += static_cast<long>(s.size());
    return mass;
}

Frame build_frame(int n_users, int n_slots, const DegreeDistribution& dist,
                  const ProfileMap& profiles, Rng& rng) {
    if (n_users < 0)
        throw std::invalid_argument("build_frame: negative user count");
    if (n_slots < dist.max_degree())
        throw std::invalid_argument("build_frame: max degree " + std::to_string(dist.max_degree()) +
                                    " exceeds slot count " + std::to_string(n_slots));
    Frame frame{FrameState(n_slots), {}};
    frame.users.reserve(n_users);
    std::vector<int> pool(n_slots);
    std::iota(pool.begin(), pool.end(), 0);
    for (int uid = 0; uid < n_users; ++uid) {
        const int degree = dist.sample(rng);
        auto it = profiles.find(degree);
        if (it == profiles.end())
            throw std::invalid_argument("build_frame: no code profile for degree " + std::to_string(degree));
        UserTransmission user;
        user.user_id = uid;
        user.degree = degree;
        user.profile = it->second;
        // Partial Fisher-Yates draw of a uniform d-subset without replacement.
        for (int i = 0; i < degree; ++i) {
            const auto j = i + static_cast<int>(rng.uniform_below(n_slots - i));
            std::swap(pool[i], pool[j]);
            user.slots.push_back(pool[i]);
        }
        std::sort(user.slots.begin(), user.slots.end());
        for (int slot : user.slots) {
            frame.state.place(uid, slot, Layer::data);
            if (degree > 1)
                frame.state.place(uid, slot, Layer::signalling);
        }
        frame.users.push_back(std::move(user));
    }
    return frame;
}

InterferenceConfig config_of(const UserTransmission& user, const FrameState& frame, Layer layer) {
    std::vector<int> counts;
    counts.reserve(user.slots.size());
    for (int slot : user.slots)
        counts.push_back(frame.interferers(user.user_id, slot, layer));
    return InterferenceConfig(std::move(counts));
}

int signalling_length_bits(int n_slots, int degree, double signalling_rate) {
    if (n_slots < 1 || degree < 1)
        throw std::invalid_argument("signalling_length_bits: N_s and N_b must be >= 1");
    if (signalling_rate <= 0.0 || signalling_rate > 1.0)
        throw std::invalid_argument("signalling_length_bits: rate must be in (0, 1]");
    if (degree == 1)
        return 0; // no complementary bursts, no pointers
    const int pointer_bits = static_cast<int>(std::ceil(std::log2(static_cast<double>(n_slots)))) * (degree - 1);
    return static_cast<int>(std::llround(pointer_bits / signalling_rate));
}

} // namespace musca
