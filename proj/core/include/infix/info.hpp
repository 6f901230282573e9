#pragma once

#include <vector>

#include "infix/alphabet.hpp"

namespace infix {

/// Right information at position r, for the non-neutral letters. Lists are
/// ascending; lists of neutral letters stay empty.
struct RightInfo {
    struct Tracked {
        Pos mu = 0;
        /// left[b]: the <= p last b's in [r, mu].
        std::vector<std::vector<Pos>> left;
        friend bool operator==(const Tracked&, const Tracked&) = default;
    };
    Pos r = 0;
    /// tracked[a]: the <= p first a's in [r, n].
    std::vector<std::vector<Tracked>> tracked;
    friend bool operator==(const RightInfo&, const RightInfo&) = default;
};

/// Left information at a limit: last[a] holds the <= p last a's in [r1, r_l].
struct LeftInfo {
    Pos r1 = 0;
    Pos rl = 0;
    std::vector<std::vector<Pos>> last;
    friend bool operator==(const LeftInfo&, const LeftInfo&) = default;
};

}  // namespace infix
