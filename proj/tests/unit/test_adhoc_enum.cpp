#include <doctest.h>

#include <random>
#include <set>

#include "infix/adhoc_enum.hpp"
#include "infix/errors.hpp"
#include "infix/language.hpp"
#include "infix/oracle.hpp"
#include "support.hpp"

using namespace infix;

namespace {

std::vector<Infix> run(const Language& lang, const AdhocMatch& m, const Word& w, Meter* meter = nullptr) {
    LetterIndex idx(w, lang.sigma.size());
    AdhocSession s(idx, m, meter);
    std::vector<Infix> out;
    while (auto x = s.next()) out.push_back(*x);
    return out;
}

std::vector<Infix> sorted(std::vector<Infix> v) {
    std::sort(v.begin(), v.end());
    return v;
}

struct Case {
    const char* letters;
    const char* regex;
    AdhocKind kind;
};

const Case kCases[] = {
    {"a,b,e", "(e|b)*ae*", AdhocKind::BStarA},
    {"a,b,e", "e*a.*ae*", AdhocKind::ASigmaA},
    {"a,e", "e*a.*ae*", AdhocKind::ASigmaA},
    {"a,e", "e*(ae*ae*)*ae*", AdhocKind::OddA},
};

}  // namespace

TEST_CASE("adhoc: fingerprints") {
    for (const auto& c : kCases) {
        auto lang = Language::from_regex(c.letters, c.regex);
        auto m = adhoc_fingerprint(lang.dfa);
        REQUIRE(m);
        CHECK(m->kind == c.kind);
        CHECK(m->a == lang.sigma.at('a'));
        CHECK(m->e == lang.sigma.at('e'));
    }
    // Renamed letters are recognized too.
    auto renamed = Language::from_regex("x,y,z", "(z|x)*yz*");
    auto m = adhoc_fingerprint(renamed.dfa);
    REQUIRE(m);
    CHECK(m->kind == AdhocKind::BStarA);
    CHECK(m->a == renamed.sigma.at('y'));
    CHECK(m->b == renamed.sigma.at('x'));
    CHECK(m->e == renamed.sigma.at('z'));

    CHECK_FALSE(adhoc_fingerprint(Language::from_regex("a,b", "a*").dfa));
    CHECK_FALSE(adhoc_fingerprint(Language::from_regex("a,b,e", ".*a.*").dfa));
    CHECK_FALSE(adhoc_fingerprint(Language::from_regex("a,b,e", "e*ae*be*|.*a.*a.*a.*|.*b.*b.*b.*").dfa));
}

TEST_CASE("adhoc: small examples") {
    auto bstar = Language::from_regex("a,b,e", "(e|b)*ae*");
    auto mb = *adhoc_fingerprint(bstar.dfa);
    CHECK(sorted(run(bstar, mb, bstar.sigma.encode("ebea"))) == std::vector<Infix>{{1, 4}, {2, 4}, {3, 4}, {4, 4}});
    CHECK(run(bstar, mb, bstar.sigma.encode("eee")).empty());
    CHECK(sorted(run(bstar, mb, bstar.sigma.encode("aa"))) == std::vector<Infix>{{1, 1}, {2, 2}});

    auto asa = Language::from_regex("a,b,e", "e*a.*ae*");
    auto ma = *adhoc_fingerprint(asa.dfa);
    CHECK(run(asa, ma, asa.sigma.encode("aea")) == std::vector<Infix>{{1, 3}});
    CHECK(run(asa, ma, asa.sigma.encode("a")).empty());
    CHECK(sorted(run(asa, ma, asa.sigma.encode("aaa"))) == brute_enumerate(asa.dfa, asa.sigma.encode("aaa")));

    auto odd = Language::from_regex("a,e", "e*(ae*ae*)*ae*");
    auto mo = *adhoc_fingerprint(odd.dfa);
    CHECK(sorted(run(odd, mo, odd.sigma.encode("aea"))) == std::vector<Infix>{{1, 1}, {1, 2}, {2, 3}, {3, 3}});
}

TEST_CASE("adhoc: equals brute force on random words") {
    std::mt19937_64 rng(21);
    for (const auto& c : kCases) {
        auto lang = Language::from_regex(c.letters, c.regex);
        auto m = *adhoc_fingerprint(lang.dfa);
        for (int it = 0; it < 500; ++it) {
            Word w = infix::test::skewed_word(rng, std::uniform_int_distribution<int>(1, 80)(rng), lang.sigma.size(), 0.3);
            auto got = run(lang, m, w);
            REQUIRE(std::set<Infix>(got.begin(), got.end()).size() == got.size());
            REQUIRE(sorted(got) == brute_enumerate(lang.dfa, w));
        }
    }
}

TEST_CASE("adhoc: metered and unmetered runs agree") {
    std::mt19937_64 rng(22);
    for (const auto& c : kCases) {
        auto lang = Language::from_regex(c.letters, c.regex);
        auto m = *adhoc_fingerprint(lang.dfa);
        Word w = infix::test::random_word(rng, 200, lang.sigma.size());
        Meter meter;
        CHECK(run(lang, m, w, &meter) == run(lang, m, w));
        CHECK(meter.ops > 0);
    }
}

TEST_CASE("adhoc: a session goes stale after an update") {
    auto lang = Language::from_regex("a,e", "e*(ae*ae*)*ae*");
    auto m = *adhoc_fingerprint(lang.dfa);
    Word w = lang.sigma.encode("aeaeaea");
    LetterIndex idx(w, 2);
    AdhocSession s(idx, m);
    REQUIRE(s.next());
    idx.apply_substitution(2, 0);
    CHECK_THROWS_AS((void)s.next(), StaleSession);
}
