#include "infix/oracle.hpp"

#include <algorithm>
#include <deque>

namespace infix {

std::vector<Infix> brute_enumerate(const Dfa& dfa, std::span<const Letter> word) {
    std::vector<Infix> out;
    const auto n = static_cast<Pos>(word.size());
    for (Pos i = 1; i <= n; ++i) {
        State q = dfa.initial;
        for (Pos j = i; j <= n; ++j) {
            q = dfa.next(q, word[j - 1]);
            if (dfa.is_accepting(q)) out.push_back({i, j});
        }
    }
    return out;
}

RightInfo ri_oracle(std::span<const Letter> word, std::size_t k, LetterMask neutral, Pos r, std::uint32_t p) {
    const auto n = static_cast<Pos>(word.size());
    RightInfo out;
    out.r = r;
    out.tracked.assign(k, {});
    for (std::size_t a = 0; a < k; ++a) {
        if (has_letter(neutral, static_cast<Letter>(a))) continue;
        for (Pos mu = r; mu <= n && out.tracked[a].size() < p; ++mu) {
            if (word[mu - 1] != a) continue;
            RightInfo::Tracked t;
            t.mu = mu;
            t.left.assign(k, {});
            for (std::size_t b = 0; b < k; ++b) {
                if (has_letter(neutral, static_cast<Letter>(b))) continue;
                std::vector<Pos> pos;
                for (Pos x = r; x <= mu; ++x)
                    if (word[x - 1] == b) pos.push_back(x);
                if (pos.size() > p) pos.erase(pos.begin(), pos.end() - p);
                t.left[b] = pos;
            }
            out.tracked[a].push_back(std::move(t));
        }
    }
    return out;
}

LeftInfo li_oracle(std::span<const Letter> word, std::size_t k, LetterMask neutral, Pos r1, Pos rl, std::uint32_t p) {
    LeftInfo out;
    out.r1 = r1;
    out.rl = rl;
    out.last.assign(k, {});
    for (std::size_t a = 0; a < k; ++a) {
        if (has_letter(neutral, static_cast<Letter>(a))) continue;
        std::vector<Pos> pos;
        for (Pos x = r1; x <= rl && x <= word.size(); ++x)
            if (word[x - 1] == a) pos.push_back(x);
        if (pos.size() > p) pos.erase(pos.begin(), pos.end() - p);
        out.last[a] = pos;
    }
    return out;
}

bool cond_oracle(const Dfa& dfa, LetterMask s, LetterMask neutral, std::span<const Letter> subword) {
    const std::size_t m = subword.size();
    const std::size_t nq = dfa.size();
    const LetterMask free = s | neutral;
    std::vector<char> seen((m + 1) * nq, 0);
    std::deque<std::pair<std::size_t, State>> queue;
    // The factor may start anywhere in the subword.
    for (std::size_t i = 0; i <= m; ++i) {
        seen[i * nq + dfa.initial] = 1;
        queue.emplace_back(i, dfa.initial);
    }
    while (!queue.empty()) {
        auto [i, q] = queue.front();
        queue.pop_front();
        if (dfa.is_accepting(q)) return true;
        for (std::size_t c = 0; c < dfa.k; ++c) {
            const auto a = static_cast<Letter>(c);
            std::size_t j = i;
            if (!has_letter(free, a)) {
                if (i >= m || subword[i] != a) continue;
                j = i + 1;
            }
            State q2 = dfa.next(q, a);
            if (!seen[j * nq + q2]) {
                seen[j * nq + q2] = 1;
                queue.emplace_back(j, q2);
            }
        }
    }
    return false;
}

std::vector<std::pair<Pos, Pos>> limits_oracle(const Dfa& dfa, LetterMask neutral, std::span<const Letter> word,
                                               std::uint32_t p) {
    const auto n = static_cast<Pos>(word.size());
    std::vector<std::pair<Pos, Pos>> out;
    for (Pos l = 1; l <= n; ++l) {
        Pos r = n;
        bool frequent = false;
        for (;;) {
            std::vector<std::uint32_t> cnt(dfa.k, 0);
            for (Pos x = l; x <= r; ++x) ++cnt[word[x - 1]];
            LetterMask t = 0;
            for (std::size_t a = 0; a < dfa.k; ++a)
                if (!has_letter(neutral, static_cast<Letter>(a)) && cnt[a] >= p) t |= letter_bit(static_cast<Letter>(a));
            frequent = t != 0;
            if (!frequent) break;
            std::vector<Letter> rare;
            for (Pos x = l; x <= r; ++x)
                if (!has_letter(t | neutral, word[x - 1])) rare.push_back(word[x - 1]);
            if (!cond_oracle(dfa, t, neutral, rare)) break;
            --r;
        }
        out.emplace_back(l, r + 1);
        if (r == n) break;
    }
    return out;
}

namespace {

bool is_factor(const Word& x, const Word& y) {
    if (x.empty()) return true;
    return std::search(y.begin(), y.end(), x.begin(), x.end()) != y.end();
}

Word erase_letters(const Word& w, LetterMask m) {
    Word out;
    for (Letter a : w)
        if (!has_letter(m, a)) out.push_back(a);
    return out;
}

}  // namespace

CrosscheckResult crosscheck_definitions(const Dfa& dfa, LetterMask neutral, std::uint32_t p,
                                        std::span<const std::pair<Word, Word>> samples) {
    CrosscheckResult res;
    for (const auto& [u, v] : samples) {
        std::vector<std::uint32_t> cnt(dfa.k, 0);
        for (Letter a : u) ++cnt[a];
        LetterMask t = 0;
        for (std::size_t a = 0; a < dfa.k; ++a)
            if (!has_letter(neutral, static_cast<Letter>(a)) && cnt[a] >= p) t |= letter_bit(static_cast<Letter>(a));
        if (t == 0 || !dfa.accepts(v)) continue;
        if (!is_factor(erase_letters(v, t), erase_letters(u, t))) continue;
        if (!dfa.accepts(u)) {
            res.implication_holds = false;
            res.counterexample = std::make_pair(u, v);
            return res;
        }
    }
    return res;
}

}  // namespace infix
