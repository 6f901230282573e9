#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "infix/alphabet.hpp"
#include "infix/dfa.hpp"

namespace infix {

/// Recognizers for Cond(S), one per nonempty set S of non-neutral letters.
///
/// Cond(S) holds the words u such that v with the letters of S erased is a
/// factor of u with the letters of S erased, for some v in L. Letters of S and
/// neutral letters are ignored by every recognizer, so queries may pass the
/// erased subword directly.
class CondFamily {
public:
    CondFamily(const Dfa& dfa, LetterMask neutral, std::uint32_t p);

    [[nodiscard]] std::uint32_t threshold() const noexcept { return p_; }
    [[nodiscard]] LetterMask neutral() const noexcept { return neutral_; }
    [[nodiscard]] LetterMask non_neutral() const noexcept { return non_neutral_; }
    [[nodiscard]] std::size_t letters() const noexcept { return k_; }

    [[nodiscard]] const Dfa& automaton(LetterMask s) const;

    /// Unchecked query, for any word over the full alphabet.
    [[nodiscard]] bool accepts(LetterMask s, std::span<const Letter> word) const noexcept {
        const Dfa& d = dfas_[s];
        return d.accepts(word);
    }

    /// Checked query: subword must avoid S and the neutral letters and hold
    /// fewer than p occurrences of every letter. Throws InternalError otherwise.
    [[nodiscard]] bool cond_member(LetterMask s, std::span<const Letter> subword) const;

private:
    std::size_t k_;
    LetterMask neutral_;
    LetterMask non_neutral_;
    std::uint32_t p_;
    std::vector<Dfa> dfas_;  // indexed by mask; empty where S is not a valid key
};

struct ThresholdCheck {
    bool ok = true;
    std::vector<Letter> counterexample;  // set when ok is false and sampling found it
    LetterMask frequent = 0;
};

/// Checks the threshold condition on each sample: with T the non-neutral
/// letters occurring at least p times, T nonempty implies
/// (u without T and neutral letters) in Cond(T) iff u in L.
ThresholdCheck validate_threshold(const Dfa& dfa, const CondFamily& family, std::uint32_t p,
                                  std::span<const std::vector<Letter>> samples);

/// Decides the threshold condition for all words, by search over
/// (state of L, state of Cond(T), capped letter counts) for every T.
/// Returns nullopt when the search exceeds max_states for some T.
std::optional<ThresholdCheck> verify_threshold_exact(const Dfa& dfa, const CondFamily& family, std::uint32_t p,
                                                     std::size_t max_states = 4'000'000);

}  // namespace infix
