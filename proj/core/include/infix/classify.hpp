#pragma once

#include <cstdint>
#include <optional>

#include "infix/alphabet.hpp"
#include "infix/dfa.hpp"
#include "infix/monoid.hpp"

namespace infix {

struct ClassificationReport {
    bool is_zg = false;
    bool is_aperiodic = false;
    bool is_extensible = false;
    bool is_semi_extensible_zg = false;
    std::optional<std::uint32_t> threshold;
    LetterMask neutral = 0;
    std::size_t monoid_size = 0;
};

/// y x^(w+1) = x^(w+1) y for all x, y. Checked against the generators only,
/// which suffices since commuting with generators means commuting with all.
bool is_zg(const Monoid& m);
bool is_aperiodic(const Monoid& m);
/// s m t in Acc for all s, t and all m in Acc.
bool is_extensible(const Monoid& m);
/// ZG, and x y z a^w in Acc for all y in Acc and non-neutral letters a.
bool is_semi_extensible_zg(const Monoid& m);
/// max(2, |M| + 1). Throws NotSemiExtensible when the class check fails.
std::uint32_t threshold(const Monoid& m);

ClassificationReport classify(const Monoid& m);
/// Throws MonoidTooLarge.
ClassificationReport classify(const Dfa& min_dfa);

}  // namespace infix
