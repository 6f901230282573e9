#include "infix/dfa.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

#include "infix/errors.hpp"

namespace infix {

std::uint32_t Nfa::add_state() {
    out.emplace_back();
    accepting.push_back(0);
    return static_cast<std::uint32_t>(out.size() - 1);
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
    std::size_t operator()(const Bits& b) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto w : b) h = (h ^ w) * 1099511628211ULL ^ (h >> 29);
        return h;
    }
};

void eps_close(const Nfa& nfa, Bits& set, std::vector<std::uint32_t>& stack) {
    stack.clear();
    for (std::size_t w = 0; w < set.size(); ++w)
        for (std::uint64_t m = set[w]; m; m &= m - 1)
            stack.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(m))));
    while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (const auto& e : nfa.out[s]) {
            if (e.on != 0) continue;
            auto& word = set[e.to / 64];
            auto bit = std::uint64_t{1} << (e.to % 64);
            if (!(word & bit)) {
                word |= bit;
                stack.push_back(e.to);
            }
        }
    }
}

struct Fragment {
    std::uint32_t in;
    std::uint32_t out;
};

class Thompson {
public:
    Thompson(const RegexAst& ast, const Alphabet& sigma) : ast_(ast), sigma_(sigma) { nfa_.k = sigma.size(); }

    Nfa build() {
        Fragment f = emit(ast_.root);
        nfa_.start = f.in;
        nfa_.accepting[f.out] = 1;
        return std::move(nfa_);
    }

private:
    void eps(std::uint32_t from, std::uint32_t to) { nfa_.out[from].push_back({0, to}); }

    Fragment emit(int id) {
        const RegexNode& n = ast_.nodes[static_cast<std::size_t>(id)];
        switch (n.op) {
            case RegexOp::Epsilon: {
                auto s = nfa_.add_state();
                return {s, s};
            }
            case RegexOp::Letter:
            case RegexOp::Any: {
                auto a = nfa_.add_state();
                auto b = nfa_.add_state();
                LetterMask on = n.op == RegexOp::Letter ? letter_bit(n.letter)
                                                        : static_cast<LetterMask>((LetterMask{1} << nfa_.k) - 1);
                nfa_.out[a].push_back({on, b});
                return {a, b};
            }
            case RegexOp::Concat: {
                Fragment f = emit(n.kids[0]);
                for (std::size_t i = 1; i < n.kids.size(); ++i) {
                    Fragment g = emit(n.kids[i]);
                    eps(f.out, g.in);
                    f.out = g.out;
                }
                return f;
            }
            case RegexOp::Union: {
                auto a = nfa_.add_state();
                auto b = nfa_.add_state();
                for (int kid : n.kids) {
                    Fragment g = emit(kid);
                    eps(a, g.in);
                    eps(g.out, b);
                }
                return {a, b};
            }
            case RegexOp::Star:
            case RegexOp::Plus:
            case RegexOp::Optional: {
                Fragment g = emit(n.kids[0]);
                auto a = nfa_.add_state();
                auto b = nfa_.add_state();
                eps(a, g.in);
                eps(g.out, b);
                if (n.op != RegexOp::Plus) eps(a, b);
                if (n.op != RegexOp::Optional) eps(g.out, g.in);
                return {a, b};
            }
            case RegexOp::Intersect: {
                Dfa acc = sub_dfa(n.kids[0]);
                for (std::size_t i = 1; i < n.kids.size(); ++i) acc = minimize(intersect(acc, sub_dfa(n.kids[i])));
                return embed(acc);
            }
        }
        INFIX_CHECK(false);
    }

    Dfa sub_dfa(int id) const {
        RegexAst sub;
        sub.nodes = ast_.nodes;
        sub.root = id;
        return compile_min_dfa(sub, sigma_);
    }

    Fragment embed(const Dfa& d) {
        std::uint32_t base = static_cast<std::uint32_t>(nfa_.out.size());
        for (std::size_t q = 0; q < d.size(); ++q) nfa_.add_state();
        auto exit = nfa_.add_state();
        for (std::size_t q = 0; q < d.size(); ++q) {
            for (std::size_t a = 0; a < d.k; ++a)
                nfa_.out[base + q].push_back({letter_bit(static_cast<Letter>(a)), base + d.delta[q * d.k + a]});
            if (d.accepting[q]) eps(base + static_cast<std::uint32_t>(q), exit);
        }
        return {base + d.initial, exit};
    }

    const RegexAst& ast_;
    const Alphabet& sigma_;
    Nfa nfa_;
};

}  // namespace

Dfa determinize(const Nfa& nfa, bool factor_closed) {
    const std::size_t words = (nfa.out.size() + 63) / 64;
    std::vector<std::uint32_t> stack;
    std::unordered_map<Bits, State, BitsHash> ids;
    std::vector<Bits> sets;
    Dfa d;
    d.k = nfa.k;

    Bits start(words, 0);
    start[nfa.start / 64] |= std::uint64_t{1} << (nfa.start % 64);
    eps_close(nfa, start, stack);

    auto accepting = [&](const Bits& s) {
        for (std::size_t w = 0; w < words; ++w)
            for (std::uint64_t m = s[w]; m; m &= m - 1)
                if (nfa.accepting[w * 64 + static_cast<std::size_t>(__builtin_ctzll(m))]) return true;
        return false;
    };

    // In factor-closed mode, an accepting subset collapses into one sticky sink.
    const State kNoSink = ~State{0};
    State sink = kNoSink;
    auto intern = [&](Bits s) -> State {
        if (factor_closed && accepting(s)) {
            if (sink == kNoSink) {
                sink = static_cast<State>(sets.size());
                sets.emplace_back();
                d.accepting.push_back(1);
            }
            return sink;
        }
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        State id = static_cast<State>(sets.size());
        d.accepting.push_back(accepting(s) ? 1 : 0);
        ids.emplace(s, id);
        sets.push_back(std::move(s));
        return id;
    };

    d.initial = intern(start);
    for (State q = 0; q < sets.size(); ++q) {
        d.delta.resize((q + 1) * d.k);
        if (q == sink) {
            for (std::size_t a = 0; a < d.k; ++a) d.delta[q * d.k + a] = sink;
            continue;
        }
        for (std::size_t a = 0; a < d.k; ++a) {
            Bits next = factor_closed ? start : Bits(words, 0);
            const Bits& cur = sets[q];
            for (std::size_t w = 0; w < words; ++w)
                for (std::uint64_t m = cur[w]; m; m &= m - 1) {
                    auto s = w * 64 + static_cast<std::size_t>(__builtin_ctzll(m));
                    for (const auto& e : nfa.out[s])
                        if (e.on & letter_bit(static_cast<Letter>(a))) next[e.to / 64] |= std::uint64_t{1} << (e.to % 64);
                }
            eps_close(nfa, next, stack);
            State t = intern(std::move(next));
            d.delta[q * d.k + a] = t;
        }
    }
    return d;
}

Dfa minimize(const Dfa& dfa) {
    const std::size_t k = dfa.k;
    // Reachable states in breadth-first order.
    std::vector<State> order;
    std::vector<std::int64_t> seen(dfa.size(), -1);
    order.push_back(dfa.initial);
    seen[dfa.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t a = 0; a < k; ++a) {
            State t = dfa.delta[order[i] * k + a];
            if (seen[t] < 0) {
                seen[t] = static_cast<std::int64_t>(order.size());
                order.push_back(t);
            }
        }

    const std::size_t n = order.size();
    std::vector<std::uint32_t> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = dfa.accepting[order[i]] ? 1 : 0;
    std::size_t classes = 0;
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> sig_ids;
        std::vector<std::uint32_t> next(n);
        std::vector<std::uint32_t> sig(k + 1);
        for (std::size_t i = 0; i < n; ++i) {
            sig[0] = cls[i];
            for (std::size_t a = 0; a < k; ++a)
                sig[a + 1] = cls[static_cast<std::size_t>(seen[dfa.delta[order[i] * k + a]])];
            auto [it, fresh] = sig_ids.emplace(sig, static_cast<std::uint32_t>(sig_ids.size()));
            next[i] = it->second;
        }
        cls.swap(next);
        if (sig_ids.size() == classes) break;
        classes = sig_ids.size();
    }

    // Canonical numbering: breadth-first over classes from the initial class.
    std::vector<std::size_t> rep(classes, n);
    for (std::size_t i = 0; i < n; ++i)
        if (rep[cls[i]] == n) rep[cls[i]] = i;
    std::vector<std::int64_t> canon(classes, -1);
    std::vector<std::uint32_t> queue{cls[0]};
    canon[cls[0]] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::size_t r = rep[queue[i]];
        for (std::size_t a = 0; a < k; ++a) {
            auto c = cls[static_cast<std::size_t>(seen[dfa.delta[order[r] * k + a]])];
            if (canon[c] < 0) {
                canon[c] = static_cast<std::int64_t>(queue.size());
                queue.push_back(c);
            }
        }
    }
    Dfa out;
    out.k = k;
    out.initial = 0;
    out.accepting.resize(classes);
    out.delta.resize(classes * k);
    for (std::size_t c = 0; c < classes; ++c) {
        std::size_t r = rep[queue[c]];
        out.accepting[c] = dfa.accepting[order[r]];
        for (std::size_t a = 0; a < k; ++a)
            out.delta[c * k + a] =
                static_cast<State>(canon[cls[static_cast<std::size_t>(seen[dfa.delta[order[r] * k + a]])]]);
    }
    return out;
}

Dfa intersect(const Dfa& x, const Dfa& y) {
    INFIX_CHECK(x.k == y.k);
    const std::size_t k = x.k;
    std::unordered_map<std::uint64_t, State> ids;
    std::vector<std::pair<State, State>> pairs;
    Dfa d;
    d.k = k;
    auto intern = [&](State p, State q) {
        std::uint64_t key = (std::uint64_t{p} << 32) | q;
        auto [it, fresh] = ids.emplace(key, static_cast<State>(pairs.size()));
        if (fresh) {
            pairs.emplace_back(p, q);
            d.accepting.push_back(x.accepting[p] && y.accepting[q] ? 1 : 0);
        }
        return it->second;
    };
    d.initial = intern(x.initial, y.initial);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        d.delta.resize((i + 1) * k);
        for (std::size_t a = 0; a < k; ++a) {
            auto [p, q] = pairs[i];
            d.delta[i * k + a] = intern(x.delta[p * k + a], y.delta[q * k + a]);
        }
    }
    return d;
}

Dfa complement(const Dfa& a) {
    Dfa d = a;
    for (auto& f : d.accepting) f = f ? 0 : 1;
    return d;
}

Dfa compile_min_dfa(const RegexAst& ast, const Alphabet& sigma) {
    Nfa nfa = Thompson(ast, sigma).build();
    return minimize(determinize(nfa));
}

Dfa compile_regex(std::string_view text, const Alphabet& sigma) { return compile_min_dfa(parse_regex(text, sigma), sigma); }

}  // namespace infix
