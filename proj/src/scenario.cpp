#include "musca/scenario.hpp"

namespace musca {

Frame four_user_scenario() {
    CodeProfile two;
    two.degree = 2;
    two.data_rate = 0.25;
    two.info_bits = 456;
    two.modulation_order = 4;
    two.signalling_rate = 14.0 / 64.0;
    two.code_id = "turbo_r14";
    two.signalling_code_id = "rm14_64";

    CodeProfile three = two;
    three.degree = 3;
    three.data_rate = 1.0 / 6.0;
    three.code_id = "turbo_r16";

    Frame frame{FrameState(3), {}};
    const std::vector<std::pair<CodeProfile, std::vector<int>>> placements = {
        {two, {0, 1}}, {two, {1, 2}}, {two, {1, 2}}, {three, {0, 1, 2}}};
    for (std::size_t i = 0; i < placements.size(); ++i) {
        UserTransmission user;
        user.user_id = static_cast<int>(i) + 1;
        user.profile = placements[i].first;
        user.degree = user.profile.degree;
        user.slots = placements[i].second;
        for (int slot : user.slots) {
            frame.state.place(user.user_id, slot, Layer::data);
            frame.state.place(user.user_id, slot, Layer::signalling);
        }
        frame.users.push_back(std::move(user));
    }
    return frame;
}

} // namespace musca
