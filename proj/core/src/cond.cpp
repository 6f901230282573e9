#include "infix/cond.hpp"

#include <array>
#include <unordered_set>

#include "infix/errors.hpp"

namespace infix {

namespace {

Dfa build_cond(const Dfa& dfa, LetterMask erased) {
    Nfa nfa;
    nfa.k = dfa.k;
    for (std::size_t q = 0; q < dfa.size(); ++q) nfa.add_state();
    nfa.start = dfa.initial;
    for (std::size_t q = 0; q < dfa.size(); ++q) {
        nfa.accepting[q] = dfa.accepting[q];
        for (std::size_t a = 0; a < dfa.k; ++a) {
            auto to = dfa.delta[q * dfa.k + a];
            auto letter = static_cast<Letter>(a);
            if (has_letter(erased, letter)) {
                // Erased letters are free in v and ignored in u.
                nfa.out[q].push_back({0, to});
                nfa.out[q].push_back({letter_bit(letter), static_cast<std::uint32_t>(q)});
            } else {
                nfa.out[q].push_back({letter_bit(letter), to});
            }
        }
    }
    return minimize(determinize(nfa, true));
}

}  // namespace

CondFamily::CondFamily(const Dfa& dfa, LetterMask neutral, std::uint32_t p)
    : k_(dfa.k), neutral_(neutral), p_(p) {
    LetterMask all = static_cast<LetterMask>((LetterMask{1} << k_) - 1);
    non_neutral_ = all & ~neutral;
    dfas_.resize(std::size_t{1} << k_);
    for (LetterMask s = non_neutral_; s; s = (s - 1) & non_neutral_) dfas_[s] = build_cond(dfa, s | neutral);
}

const Dfa& CondFamily::automaton(LetterMask s) const {
    INFIX_CHECK(s != 0 && (s & ~non_neutral_) == 0);
    return dfas_[s];
}

bool CondFamily::cond_member(LetterMask s, std::span<const Letter> subword) const {
    INFIX_CHECK(s != 0 && (s & ~non_neutral_) == 0);
    std::array<std::uint32_t, Alphabet::kMaxLetters> count{};
    for (Letter a : subword) {
        INFIX_CHECK(a < k_);
        INFIX_CHECK(!has_letter(s | neutral_, a));
        INFIX_CHECK(++count[a] < p_);
    }
    return dfas_[s].accepts(subword);
}

ThresholdCheck validate_threshold(const Dfa& dfa, const CondFamily& family, std::uint32_t p,
                                  std::span<const std::vector<Letter>> samples) {
    std::vector<Letter> erased;
    for (const auto& u : samples) {
        std::array<std::uint32_t, Alphabet::kMaxLetters> count{};
        for (Letter a : u) ++count[a];
        LetterMask t = 0;
        for (std::size_t a = 0; a < family.letters(); ++a)
            if (has_letter(family.non_neutral(), static_cast<Letter>(a)) && count[a] >= p) t |= letter_bit(static_cast<Letter>(a));
        if (t == 0) continue;
        erased.clear();
        for (Letter a : u)
            if (!has_letter(t | family.neutral(), a)) erased.push_back(a);
        if (family.accepts(t, erased) != dfa.accepts(u)) return ThresholdCheck{false, u, t};
    }
    return ThresholdCheck{};
}

std::optional<ThresholdCheck> verify_threshold_exact(const Dfa& dfa, const CondFamily& family, std::uint32_t p,
                                                     std::size_t max_states) {
    const std::size_t k = family.letters();
    std::vector<Letter> nn;
    for (std::size_t a = 0; a < k; ++a)
        if (has_letter(family.non_neutral(), static_cast<Letter>(a))) nn.push_back(static_cast<Letter>(a));

    // Mixed-radix key: dfa state, cond state, then one digit in [0, p] per non-neutral letter.
    for (LetterMask t = family.non_neutral(); t; t = (t - 1) & family.non_neutral()) {
        const Dfa& cond = family.automaton(t);
        long double span = static_cast<long double>(dfa.size()) * static_cast<long double>(cond.size());
        for (std::size_t i = 0; i < nn.size(); ++i) span *= static_cast<long double>(p + 1);
        if (span > 1.8e19L) return std::nullopt;

        struct Node {
            State q;
            State c;
            std::array<std::uint32_t, Alphabet::kMaxLetters> cnt;
        };
        auto key = [&](const Node& n) {
            std::uint64_t h = n.q;
            h = h * cond.size() + n.c;
            for (std::size_t i = 0; i < nn.size(); ++i) h = h * (p + 1) + n.cnt[i];
            return h;
        };
        std::unordered_set<std::uint64_t> seen;
        std::vector<Node> frontier{Node{dfa.initial, cond.initial, {}}};
        seen.insert(key(frontier[0]));
        while (!frontier.empty()) {
            Node n = frontier.back();
            frontier.pop_back();
            bool exact_t = true;
            for (std::size_t i = 0; i < nn.size(); ++i) {
                bool in_t = has_letter(t, nn[i]);
                if (in_t != (n.cnt[i] >= p)) exact_t = false;
            }
            if (exact_t && dfa.is_accepting(n.q) != cond.is_accepting(n.c)) return ThresholdCheck{false, {}, t};
            for (std::size_t i = 0; i < nn.size(); ++i) {
                Letter a = nn[i];
                Node m = n;
                m.q = dfa.next(n.q, a);
                if (has_letter(t, a)) {
                    if (m.cnt[i] < p) ++m.cnt[i];
                } else {
                    if (m.cnt[i] + 1 >= p) continue;  // a would become frequent: not this T
                    ++m.cnt[i];
                    m.c = cond.next(n.c, a);
                }
                if (seen.insert(key(m)).second) {
                    if (seen.size() > max_states) return std::nullopt;
                    frontier.push_back(m);
                }
            }
        }
    }
    return ThresholdCheck{};
}

}  // namespace infix
