#pragma once

// Shared fixtures and independent reference checks for the test suites.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "infix/alphabet.hpp"
#include "infix/dfa.hpp"
#include "infix/language.hpp"
#include "infix/regex.hpp"

namespace infix::test {

struct LangSpec {
    const char* name;
    const char* letters;
    const char* regex;
    std::uint32_t p_hint;  // 0: use the default threshold
};

// Semi-extensible ZG languages used by the differential suites.
inline const std::vector<LangSpec>& semiext_languages() {
    static const std::vector<LangSpec> v = {
        {"lab", "a,b,e", "e*ae*be*|.*a.*a.*a.*|.*b.*b.*b.*", 3},
        {"laabb", "a,b,e", "e*ae*ae*be*be*|(.*a.*a.*)&(.*b.*b.*b.*)|(.*a.*a.*a.*)&(.*b.*b.*)", 3},
        {"l5_limits", "a,b,c,e",
         "(.*a.*a.*a.*a.*a.*)&(.*b.*c.*)|(.*b.*b.*b.*b.*b.*)&(.*c.*a.*)|(.*c.*c.*c.*c.*c.*)&(.*a.*b.*)|"
         "(.*a.*a.*a.*a.*a.*)&(.*b.*b.*b.*b.*b.*)&(.*c.*)|(.*a.*a.*a.*a.*a.*)&(.*c.*c.*c.*c.*c.*)&(.*b.*)|"
         "(.*b.*b.*b.*b.*b.*)&(.*c.*c.*c.*c.*c.*)&(.*a.*)",
         5},
        {"two_or_zero_a", "a,e", "e*|.*a.*a.*", 0},
        {"contains_a", "a,b,e", ".*a.*", 0},
        {"both_ab", "a,b", "(.*a.*)&(.*b.*)", 0},
    };
    return v;
}

inline Language make_language(const LangSpec& s) {
    Language l = Language::from_regex(s.letters, s.regex, s.name);
    if (s.p_hint) l.threshold_hint = s.p_hint;
    return l;
}

inline Word random_word(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    Word w(n);
    std::uniform_int_distribution<int> d(0, static_cast<int>(k) - 1);
    for (auto& c : w) c = static_cast<Letter>(d(rng));
    return w;
}

// Words with letter 0 weighted more heavily, so that thresholds are crossed.
inline Word skewed_word(std::mt19937_64& rng, std::size_t n, std::size_t k, double p0) {
    Word w(n);
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> d(0, static_cast<int>(k) - 1);
    for (auto& c : w) c = u(rng) < p0 ? Letter{0} : static_cast<Letter>(d(rng));
    return w;
}

// Membership by set semantics on the syntax tree: table[i][j] tells whether
// word[i, j) matches the node. Exponential-free but cubic; short words only.
class RegexSemantics {
public:
    RegexSemantics(const RegexAst& ast, std::size_t k) : ast_(ast), k_(k) {}

    bool matches(const Word& w) const {
        auto t = eval(ast_.root, w);
        return t[0][w.size()];
    }

private:
    using Table = std::vector<std::vector<char>>;

    Table eval(int id, const Word& w) const {
        const std::size_t n = w.size();
        Table t(n + 1, std::vector<char>(n + 1, 0));
        const RegexNode& node = ast_.nodes[static_cast<std::size_t>(id)];
        switch (node.op) {
            case RegexOp::Epsilon:
                for (std::size_t i = 0; i <= n; ++i) t[i][i] = 1;
                break;
            case RegexOp::Letter:
                for (std::size_t i = 0; i < n; ++i) t[i][i + 1] = w[i] == node.letter;
                break;
            case RegexOp::Any:
                for (std::size_t i = 0; i < n; ++i) t[i][i + 1] = w[i] < k_;
                break;
            case RegexOp::Concat: {
                t = eval(node.kids[0], w);
                for (std::size_t c = 1; c < node.kids.size(); ++c) t = compose(t, eval(node.kids[c], w));
                break;
            }
            case RegexOp::Union:
                for (int kid : node.kids) {
                    auto u = eval(kid, w);
                    for (std::size_t i = 0; i <= n; ++i)
                        for (std::size_t j = 0; j <= n; ++j) t[i][j] |= u[i][j];
                }
                break;
            case RegexOp::Intersect: {
                t = eval(node.kids[0], w);
                for (std::size_t c = 1; c < node.kids.size(); ++c) {
                    auto u = eval(node.kids[c], w);
                    for (std::size_t i = 0; i <= n; ++i)
                        for (std::size_t j = 0; j <= n; ++j) t[i][j] &= u[i][j];
                }
                break;
            }
            case RegexOp::Star:
            case RegexOp::Plus: {
                auto base = eval(node.kids[0], w);
                Table acc = base;
                for (std::size_t round = 0; round < n + 1; ++round) {
                    auto next = compose(acc, base);
                    for (std::size_t i = 0; i <= n; ++i)
                        for (std::size_t j = 0; j <= n; ++j) next[i][j] |= acc[i][j];
                    acc = next;
                }
                t = acc;
                if (node.op == RegexOp::Star)
                    for (std::size_t i = 0; i <= n; ++i) t[i][i] = 1;
                break;
            }
            case RegexOp::Optional:
                t = eval(node.kids[0], w);
                for (std::size_t i = 0; i <= n; ++i) t[i][i] = 1;
                break;
        }
        return t;
    }

    static Table compose(const Table& x, const Table& y) {
        const std::size_t m = x.size();
        Table t(m, std::vector<char>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t h = i; h < m; ++h)
                if (x[i][h])
                    for (std::size_t j = h; j < m; ++j)
                        if (y[h][j]) t[i][j] = 1;
        return t;
    }

    const RegexAst& ast_;
    std::size_t k_;
};

// All words over k letters of length exactly len, in lexicographic order.
inline std::vector<Word> all_words(std::size_t k, std::size_t len) {
    std::vector<Word> out;
    Word w(len, 0);
    for (;;) {
        out.push_back(w);
        std::size_t i = len;
        while (i > 0 && w[i - 1] + 1u == k) w[--i] = 0;
        if (i == 0) break;
        ++w[i - 1];
    }
    return out;
}

// Syntactic classes observed on words of length <= max_len, using contexts of
// length <= ctx_len. A lower bound on the syntactic monoid size that is exact
// once both lengths are large enough.
inline std::size_t syntactic_classes(const Dfa& d, std::size_t max_len, std::size_t ctx_len) {
    std::vector<Word> ctx;
    for (std::size_t len = 0; len <= ctx_len; ++len)
        for (auto& w : all_words(d.k, len)) ctx.push_back(w);
    std::set<std::vector<char>> classes;
    for (std::size_t len = 0; len <= max_len; ++len)
        for (auto& u : all_words(d.k, len)) {
            std::vector<char> sig;
            for (auto& x : ctx)
                for (auto& y : ctx) {
                    Word z = x;
                    z.insert(z.end(), u.begin(), u.end());
                    z.insert(z.end(), y.begin(), y.end());
                    sig.push_back(d.accepts(z));
                }
            classes.insert(std::move(sig));
        }
    return classes.size();
}

}  // namespace infix::test
