#pragma once

#include "musca/frame.hpp"

namespace musca {

/// The four-user, three-slot reference scenario: users 1-3 split a rate-1/4
/// codeword over two slots, user 4 a rate-1/6 codeword over all three, and
/// every burst starts out collided. Slot occupancies are (2, 4, 3):
///   slot 0: users 1, 4
///   slot 1: users 1, 2, 3, 4
///   slot 2: users 2, 3, 4
/// Decoding it at 5 dB with the anchor table exercises the full two-phase
/// SIC sequence.
Frame four_user_scenario();

constexpr double kScenarioSnrDb = 5.0;

} // namespace musca
