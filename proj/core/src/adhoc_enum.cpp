#include "infix/adhoc_enum.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "infix/errors.hpp"

namespace infix {

const char* to_string(AdhocKind kind) noexcept {
    switch (kind) {
        case AdhocKind::BStarA: return "b*a";
        case AdhocKind::ASigmaA: return "aS*a";
        case AdhocKind::OddA: return "(aa)*a";
    }
    return "?";
}

namespace {

struct Canonical {
    AdhocKind kind;
    const char* letters;
    const char* regex;
};

constexpr std::array kCanonical = {
    Canonical{AdhocKind::BStarA, "abe", "(e|b)*ae*"},
    Canonical{AdhocKind::ASigmaA, "abe", "e*a.*ae*"},
    Canonical{AdhocKind::ASigmaA, "ae", "e*a.*ae*"},
    Canonical{AdhocKind::OddA, "ae", "e*(ae*ae*)*ae*"},
};

Dfa rename(const Dfa& d, const std::vector<Letter>& perm) {
    Dfa out = d;
    for (State q = 0; q < d.size(); ++q)
        for (std::size_t a = 0; a < d.k; ++a) out.delta[q * d.k + perm[a]] = d.delta[q * d.k + a];
    return minimize(out);
}

}  // namespace

std::optional<AdhocMatch> adhoc_fingerprint(const Dfa& min_dfa) {
    for (const auto& c : kCanonical) {
        Alphabet sigma(c.letters);
        if (sigma.size() != min_dfa.k) continue;
        Dfa canon = compile_regex(c.regex, sigma);
        std::vector<Letter> perm(sigma.size());
        std::iota(perm.begin(), perm.end(), Letter{0});
        do {
            // perm maps canonical letters to the language's letters.
            if (rename(canon, perm) == min_dfa) {
                AdhocMatch m{c.kind};
                m.a = perm[sigma.at('a')];
                m.e = perm[sigma.at('e')];
                if (auto b = sigma.find('b')) m.b = perm[*b];
                return m;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

AdhocSession::AdhocSession(const LetterIndex& index, const AdhocMatch& match, Meter* meter)
    : index_(&index),
      m_(match),
      meter_(meter),
      w_(index.word()),
      version_(index.version()),
      n_(index.size()),
      outer_(index.list(match.a).retrieve()) {}

std::optional<Infix> AdhocSession::next() {
    if (index_->version() != version_) throw StaleSession("word was updated after the enumeration started");
    Infix out;
    bool ok = false;
    switch (m_.kind) {
        case AdhocKind::BStarA: ok = next_bstar_a(out); break;
        case AdhocKind::ASigmaA: ok = next_a_sigma_a(out); break;
        case AdhocKind::OddA: ok = next_odd_a(out); break;
    }
    if (!ok) return std::nullopt;
    return out;
}

// Infixes ending in the e's right of an a, starting anywhere after the previous a.
bool AdhocSession::next_bstar_a(Infix& out) {
    tick(meter_);
    if (!have_anchor_) {
        auto x = outer_.next();
        if (!x) return false;
        i_ = *x;
        lp_ = i_;
        rp_ = i_;
        have_anchor_ = true;
    }
    out = Infix{lp_, rp_};
    if (rp_ < n_ && is_e(rp_ + 1)) {
        ++rp_;
    } else if (lp_ > 1 && w_[lp_ - 1] != m_.a) {
        --lp_;
        rp_ = i_;
    } else {
        have_anchor_ = false;
    }
    return true;
}

// Pairs i < j of a's, extended over e's on both ends.
bool AdhocSession::next_a_sigma_a(Infix& out) {
    tick(meter_);
    while (!have_anchor_) {
        tick(meter_);
        if (i_ == 0) {
            auto x = outer_.next();
            if (!x) return false;
            i_ = *x;
            inner_ = outer_;
        }
        auto y = inner_.next();
        if (!y) {
            i_ = 0;
            continue;
        }
        j_ = *y;
        lt_ = std::min(i_, j_);
        rt_ = std::max(i_, j_);
        lp_ = lt_;
        rp_ = rt_;
        have_anchor_ = true;
    }
    out = Infix{lp_, rp_};
    if (rp_ < n_ && is_e(rp_ + 1)) {
        ++rp_;
    } else if (lp_ > 1 && is_e(lp_ - 1)) {
        --lp_;
        rp_ = rt_;
    } else {
        have_anchor_ = false;
    }
    return true;
}

// Every infix with 2t+1 a's is produced from its middle a, level t.
bool AdhocSession::next_odd_a(Infix& out) {
    tick(meter_);
    if (!have_anchor_) {
        auto x = outer_.next();
        if (!x) return false;
        i_ = *x;
        lt_ = rt_ = i_;
        lp_ = rp_ = i_;
        have_anchor_ = true;
    }
    out = Infix{lp_, rp_};
    if (rp_ < n_ && is_e(rp_ + 1)) {
        ++rp_;
        return true;
    }
    rp_max_ = rp_;
    if (lp_ > 1 && is_e(lp_ - 1)) {
        --lp_;
        rp_ = rt_;
        return true;
    }
    // Level done: the next a's on each side bound the next level.
    if (lp_ > 1 && rp_max_ < n_) {
        lt_ = lp_ - 1;
        rt_ = rp_max_ + 1;
        INFIX_CHECK(w_[lt_] == m_.a && w_[rt_] == m_.a);
        lp_ = lt_;
        rp_ = rt_;
    } else {
        have_anchor_ = false;
    }
    return true;
}

}  // namespace infix
