#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "infix/alphabet.hpp"
#include "infix/dfa.hpp"
#include "infix/info.hpp"

// Brute-force reference implementations. Quadratic or worse; for tests only.
// None of these functions call into the enumeration modules.

namespace infix {

/// All [i, j] with word[i..j] accepted, sorted. word is 0-based, positions 1-based.
std::vector<Infix> brute_enumerate(const Dfa& dfa, std::span<const Letter> word);

/// Right information at r, by direct scan (non-neutral letters only).
RightInfo ri_oracle(std::span<const Letter> word, std::size_t k, LetterMask neutral, Pos r, std::uint32_t p);

/// Left information for the range [r1, rl], by direct scan.
LeftInfo li_oracle(std::span<const Letter> word, std::size_t k, LetterMask neutral, Pos r1, Pos rl, std::uint32_t p);

/// Is there v in L such that v without S and neutral letters is a factor of
/// subword? Decided by reachability over (matched prefix, DFA state).
bool cond_oracle(const Dfa& dfa, LetterMask s, LetterMask neutral, std::span<const Letter> subword);

/// Limits (l, r_l) of the main loop, recomputing the frequent letters and
/// the rare subword from scratch for every (l, r). The last pair is the
/// left endpoint at which the loop terminates.
std::vector<std::pair<Pos, Pos>> limits_oracle(const Dfa& dfa, LetterMask neutral, std::span<const Letter> word,
                                               std::uint32_t p);

struct CrosscheckResult {
    /// No sampled pair violates the self-contained implication.
    bool implication_holds = true;
    std::optional<std::pair<Word, Word>> counterexample;  // (u, v)
};

/// For each (u, v): with T the non-neutral letters occurring >= p times in u,
/// v in L, T nonempty and v without T a factor of u without T must imply u in L.
CrosscheckResult crosscheck_definitions(const Dfa& dfa, LetterMask neutral, std::uint32_t p,
                                        std::span<const std::pair<Word, Word>> samples);

}  // namespace infix
