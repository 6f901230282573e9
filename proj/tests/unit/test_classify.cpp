#include <doctest.h>

#include <random>

#include "infix/classify.hpp"
#include "infix/cond.hpp"
#include "infix/errors.hpp"
#include "support.hpp"

using namespace infix;

namespace {

ClassificationReport report(const char* letters, const char* re) {
    return classify(compile_regex(re, Alphabet::from_csv(letters)));
}

const char* kLab = "e*ae*be*|.*a.*a.*a.*|.*b.*b.*b.*";
const char* kLaabb = "e*ae*ae*be*be*|(.*a.*a.*)&(.*b.*b.*b.*)|(.*a.*a.*a.*)&(.*b.*b.*)";

}  // namespace

TEST_CASE("classify: ZG examples") {
    CHECK(report("a", "(aa)*").is_zg);
    CHECK(report("a,b", "ab").is_zg);
    CHECK(report("a,b", "(.*a.*a.*a.*)&((a*ba*ba*b)*a*)").is_zg);
    CHECK(report("a,b,c,d", "(a|b)*c(a|b)*d(a|b)*").is_zg);
    CHECK(report("a,b,c,d",
                 "(.*a.*a.*a.*)&(((a|c|d)*b(a|c|d)*b(a|c|d)*b)*(a|c|d)*)&((a|b)*c(a|b)*d(a|b)*)")
              .is_zg);
    CHECK_FALSE(report("a,b,e", "(e|b)*ae*").is_zg);
    CHECK(report("a,b,e", kLab).is_zg);
}

TEST_CASE("classify: aperiodicity") {
    CHECK(report("a,b", "a*").is_aperiodic);
    CHECK_FALSE(report("a", "(aa)*").is_aperiodic);
}

TEST_CASE("classify: extensibility") {
    CHECK(report("a,b,e", ".*a.*").is_extensible);
    CHECK_FALSE(report("a,b,e", kLab).is_extensible);
    CHECK(report("a,b,e", kLaabb).is_extensible);
}

TEST_CASE("classify: semi-extensible ZG") {
    auto lab = report("a,b,e", kLab);
    CHECK(lab.is_semi_extensible_zg);
    CHECK_FALSE(lab.is_extensible);
    CHECK(lab.is_zg);
    REQUIRE(lab.threshold);
    CHECK(*lab.threshold == lab.monoid_size + 1);
    CHECK_FALSE(report("a,e", "e*(ae*ae*)*ae*").is_semi_extensible_zg);
    CHECK(report("a,e", "e*(ae*ae*)*ae*").is_zg);
    CHECK(report("a,e", "e*|.*a.*a.*").is_semi_extensible_zg);
    auto ca = report("a,b,e", ".*a.*");
    CHECK(ca.is_extensible);
    CHECK(ca.is_semi_extensible_zg);
    CHECK(ca.monoid_size == 2);
    CHECK(ca.threshold == 3u);
}

TEST_CASE("classify: threshold requires the class") {
    Monoid m(compile_regex("(e|b)*ae*", Alphabet("abe")));
    CHECK_THROWS_AS((void)threshold(m), NotSemiExtensible);
    Monoid two(compile_regex(".*a.*", Alphabet("ab")));
    CHECK(threshold(two) == 3);
}

TEST_CASE("classify: implications between the classes") {
    const char* res[] = {kLab, kLaabb, ".*a.*", "(e|b)*ae*", "e*a.*ae*", "a*", "(ab)*", "ab", "(.*a.*)&(.*b.*)",
                         "e*ae*be*", ".*a.*b.*|.*b.*b.*"};
    for (auto re : res) {
        auto r = report("a,b,e", re);
        CAPTURE(re);
        if (r.is_semi_extensible_zg) {
            CHECK(r.is_zg);
            CHECK(r.is_aperiodic);
            CHECK(r.threshold.has_value());
            CHECK(*r.threshold >= 2);
        } else {
            CHECK_FALSE(r.threshold.has_value());
        }
        if (r.is_extensible && r.is_zg) CHECK(r.is_semi_extensible_zg);
    }
}

TEST_CASE("threshold: hand-chosen value and the default both validate") {
    Alphabet s("abe");
    Dfa d = compile_regex(kLab, s);
    auto r = classify(d);
    std::mt19937_64 rng(3);
    std::vector<Word> samples;
    for (int i = 0; i < 500; ++i)
        samples.push_back(infix::test::random_word(rng, std::uniform_int_distribution<int>(0, 14)(rng), 3));
    for (std::uint32_t p : {3u, 4u, *r.threshold, *r.threshold + 1}) {
        CondFamily f(d, r.neutral, p);
        CHECK(validate_threshold(d, f, p, samples).ok);
        auto exact = verify_threshold_exact(d, f, p);
        REQUIRE(exact);
        CHECK(exact->ok);
    }
    // p = 2 is not a threshold: "aab" has two a's, and ab is a factor of it.
    CondFamily f2(d, r.neutral, 2);
    auto exact2 = verify_threshold_exact(d, f2, 2);
    REQUIRE(exact2);
    CHECK_FALSE(exact2->ok);
    std::vector<Word> bad = {s.encode("aab")};
    auto sampled = validate_threshold(d, f2, 2, bad);
    CHECK_FALSE(sampled.ok);
    CHECK(sampled.counterexample == s.encode("aab"));
}

TEST_CASE("threshold: worked cases of the consistency condition") {
    Alphabet s("abe");
    Dfa d = compile_regex(kLab, s);
    CondFamily f(d, letter_bit(2), 3);
    std::vector<Word> u1 = {s.encode("aaaab")};
    auto c1 = validate_threshold(d, f, 3, u1);
    CHECK(c1.ok);
    std::vector<Word> u2 = {s.encode("ab")};
    CHECK(validate_threshold(d, f, 3, u2).ok);
}

TEST_CASE("threshold: validity is inherited by larger values") {
    std::mt19937_64 rng(11);
    for (const auto& spec : infix::test::semiext_languages()) {
        Language l = infix::test::make_language(spec);
        auto r = classify(l.dfa);
        std::vector<Word> samples;
        for (int i = 0; i < 500; ++i)
            samples.push_back(infix::test::skewed_word(rng, std::uniform_int_distribution<int>(0, 14)(rng), l.sigma.size(), 0.4));
        std::uint32_t p = spec.p_hint ? spec.p_hint : *r.threshold;
        CAPTURE(spec.name);
        CondFamily f(l.dfa, r.neutral, p), g(l.dfa, r.neutral, p + 1);
        CHECK(validate_threshold(l.dfa, f, p, samples).ok);
        CHECK(validate_threshold(l.dfa, g, p + 1, samples).ok);
    }
}
