#include <doctest.h>

#include <random>
#include <set>

#include "infix/engine.hpp"
#include "infix/errors.hpp"
#include "infix/oracle.hpp"
#include "support.hpp"

using namespace infix;

namespace {

std::string data(const char* file) { return std::string(INFIX_TEST_DATA) + "/" + file; }

std::vector<Infix> drain(InfixCursor& c) {
    std::vector<Infix> out;
    while (auto x = c.next()) out.push_back(*x);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("engine: strategy selection") {
    CHECK(plan_language(load_language(data("lab.lang"))).strategy == Strategy::Semiext);
    CHECK(plan_language(load_language(data("laabb.lang"))).strategy == Strategy::Semiext);
    CHECK(plan_language(load_language(data("bstar_a.lang"))).strategy == Strategy::Adhoc);
    CHECK(plan_language(load_language(data("a_sigma_a.lang"))).strategy == Strategy::Adhoc);
    CHECK(plan_language(load_language(data("odd_a.lang"))).strategy == Strategy::Adhoc);
    CHECK(plan_language(load_language(data("astar.lang"))).strategy == Strategy::OracleOnly);
    CHECK(plan_language(load_language(data("contains_a.lang"))).strategy == Strategy::Semiext);

    auto lab = load_language(data("lab.lang"));
    auto plan = plan_language(lab);
    CHECK(plan.threshold_in_use == 3u);
    CHECK(plan.report->threshold == 12u);
    CHECK(std::string(to_string(Strategy::SimpleOracle)) == "simple+oracle");
}

TEST_CASE("engine: hints are verified") {
    auto lab = load_language(data("lab.lang"));
    lab.threshold_hint = 1;
    CHECK_THROWS_AS((void)plan_language(lab), std::invalid_argument);
    lab.threshold_hint = 3;
    lab.neutral_hint = letter_bit(lab.sigma.at('a'));
    CHECK_THROWS_AS((void)plan_language(lab), std::invalid_argument);
}

TEST_CASE("engine: forced strategies") {
    auto lab = load_language(data("lab.lang"));
    Word w = lab.sigma.encode("abe");
    CHECK_THROWS_AS(Engine(lab, w, Strategy::SimpleOracle), UnsupportedLanguage);
    CHECK_THROWS_AS(Engine(lab, w, Strategy::Adhoc), UnsupportedLanguage);
    Engine brute(lab, w, Strategy::OracleOnly);
    auto c = brute.enumerate();
    CHECK(drain(*c) == brute_enumerate(lab.dfa, w));
}

TEST_CASE("engine: update validation") {
    auto ca = load_language(data("contains_a.lang"));
    Word w = ca.sigma.encode("ebeb");
    Engine e(ca, w, Strategy::SimpleOracle);
    CHECK_THROWS_AS(e.update(0, 0), std::out_of_range);
    CHECK_THROWS_AS(e.update(5, 0), std::out_of_range);
    CHECK_THROWS_AS(e.update(1, 7), std::invalid_argument);
    CHECK_FALSE(e.member());
    e.update(2, ca.sigma.at('a'));
    CHECK(e.member());
    {
        auto c = e.enumerate();
        REQUIRE(c->next());
        CHECK_THROWS_AS(e.update(1, 0), UpdateDuringEnumeration);
    }
    // The aborted session gave the tree back.
    e.update(1, ca.sigma.at('a'));
    auto c = e.enumerate();
    CHECK(drain(*c) == brute_enumerate(ca.dfa, e.word()));
}

TEST_CASE("engine: interleaved updates match brute force for every strategy") {
    std::mt19937_64 rng(31);
    for (const char* f : {"lab.lang", "laabb.lang", "l5_limits.lang", "two_or_zero_a.lang", "contains_a.lang",
                          "both_ab.lang", "bstar_a.lang", "a_sigma_a.lang", "odd_a.lang", "astar.lang"}) {
        auto lang = load_language(data(f));
        for (int it = 0; it < 30; ++it) {
            Word w = infix::test::skewed_word(rng, std::uniform_int_distribution<int>(1, 60)(rng), lang.sigma.size(), 0.3);
            Engine e(lang, w);
            for (int u = 0; u < 10; ++u) {
                Pos i = std::uniform_int_distribution<Pos>(1, e.size())(rng);
                Letter a = static_cast<Letter>(std::uniform_int_distribution<int>(0, static_cast<int>(lang.sigma.size()) - 1)(rng));
                e.update(i, a);
                w[i - 1] = a;
                auto c = e.enumerate();
                std::vector<Infix> got;
                while (auto x = c->next()) got.push_back(*x);
                REQUIRE(std::set<Infix>(got.begin(), got.end()).size() == got.size());
                std::sort(got.begin(), got.end());
                REQUIRE(got == brute_enumerate(lang.dfa, w));
                REQUIRE(e.member() == lang.dfa.accepts(w));
            }
        }
    }
}
