#pragma once

#include <cstdint>

namespace infix {

/// Abstract cost counter. Structures hold a nullable Meter*; null disables
/// counting. One tick per primitive step; cells are machine words.
struct Meter {
    std::uint64_t ops = 0;

    void reset() noexcept { ops = 0; }
};

inline void tick(Meter* m, std::uint64_t n = 1) noexcept {
    if (m) m->ops += n;
}

}  // namespace infix
