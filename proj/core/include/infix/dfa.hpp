#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "infix/alphabet.hpp"
#include "infix/regex.hpp"

namespace infix {

using State = std::uint32_t;

/// Complete deterministic automaton over letters 0..k-1.
struct Dfa {
    std::size_t k = 0;
    State initial = 0;
    std::vector<std::uint8_t> accepting;  // one flag per state
    std::vector<State> delta;             // delta[q * k + a]

    [[nodiscard]] std::size_t size() const noexcept { return accepting.size(); }
    [[nodiscard]] State next(State q, Letter a) const noexcept { return delta[q * k + a]; }
    [[nodiscard]] bool is_accepting(State q) const noexcept { return accepting[q] != 0; }
    [[nodiscard]] State run(State q, std::span<const Letter> word) const noexcept {
        for (Letter a : word) q = next(q, a);
        return q;
    }
    [[nodiscard]] bool accepts(std::span<const Letter> word) const noexcept { return is_accepting(run(initial, word)); }

    friend bool operator==(const Dfa&, const Dfa&) = default;
};

/// Thompson construction, subset construction, then minimize().
Dfa compile_min_dfa(const RegexAst& ast, const Alphabet& sigma);
Dfa compile_regex(std::string_view text, const Alphabet& sigma);

/// Drops unreachable states, merges equivalent ones and renumbers states in
/// breadth-first order from the initial state. Two automata accept the same
/// language iff their minimized forms compare equal.
Dfa minimize(const Dfa& dfa);

Dfa intersect(const Dfa& a, const Dfa& b);
Dfa complement(const Dfa& a);

/// Nondeterministic automaton with epsilon moves, used as an intermediate form.
struct Nfa {
    struct Edge {
        LetterMask on = 0;  // 0 means epsilon
        std::uint32_t to = 0;
    };
    std::size_t k = 0;
    std::uint32_t start = 0;
    std::vector<std::vector<Edge>> out;
    std::vector<std::uint8_t> accepting;

    std::uint32_t add_state();
};

/// Subset construction. If factor_closed is set, the start set is re-injected
/// after every letter and acceptance is sticky, so the result recognizes words
/// having some factor accepted by nfa.
Dfa determinize(const Nfa& nfa, bool factor_closed = false);

}  // namespace infix
