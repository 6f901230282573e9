#include <doctest.h>

#include "infix/errors.hpp"
#include "infix/language.hpp"
#include "infix/regex.hpp"

using namespace infix;

TEST_CASE("regex: star binds tighter than concatenation") {
    Alphabet s("abe");
    CHECK(parse_regex("b*a", s).to_string(s) == "Concat(Star(b),a)");
    CHECK(parse_regex("ab|e", s).to_string(s) == "Union(Concat(a,b),e)");
}

TEST_CASE("regex: four-letter example parses") {
    Alphabet s("abcd");
    auto ast = parse_regex("(a|b)*c(a|b)*d(a|b)*", s);
    CHECK(ast.to_string(s) == "Concat(Star(Union(a,b)),c,Star(Union(a,b)),d,Star(Union(a,b)))");
}

TEST_CASE("regex: syntax errors carry the offset") {
    Alphabet s("a");
    try {
        (void)parse_regex("a**)", s);
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS((void)parse_regex("(a", s), SyntaxError);
    CHECK_THROWS_AS((void)parse_regex("", s), SyntaxError);
    CHECK_THROWS_AS((void)parse_regex("ab", s), SyntaxError);
    CHECK_THROWS_AS((void)parse_regex("a|", s), SyntaxError);
}

TEST_CASE("regex: any, epsilon, plus, optional and intersection") {
    Alphabet s("ab");
    CHECK(parse_regex(".~a+b?", s).to_string(s) == "Concat(Any,Epsilon,Plus(a),Optional(b))");
    CHECK(parse_regex("a&b|a", s).to_string(s) == "Union(Intersect(a,b),a)");
}

TEST_CASE("alphabet: csv parsing and reserved symbols") {
    auto s = Alphabet::from_csv("a, b ,e");
    CHECK(s.size() == 3);
    CHECK(s.at('e') == 2);
    CHECK(s.decode(s.encode("eab")) == "eab");
    CHECK_THROWS(Alphabet::from_csv("a,a"));
    CHECK_THROWS(Alphabet::from_csv("a,*"));
    CHECK_THROWS(Alphabet::from_csv("ab,c"));
    CHECK_THROWS(s.encode("abc"));
}

TEST_CASE("language file: keys, comments and hints") {
    auto l = parse_language("# comment\nletters: a,b,e\nregex: e*ae*be*\nneutral-hint: e\nthreshold-hint: 3\n");
    CHECK(l.sigma.size() == 3);
    CHECK(l.neutral_hint == letter_bit(2));
    CHECK(l.threshold_hint == 3u);
    CHECK(l.dfa.accepts(l.sigma.encode("eaeeb")));
    CHECK_THROWS_AS(parse_language("letters: a\n"), LanguageFileError);
    CHECK_THROWS_AS(parse_language("letters: a\nregex: a\nthreshold-hint: 1\n"), LanguageFileError);
    CHECK_THROWS_AS(parse_language("letters: a\nregex: a\nbogus: 1\n"), LanguageFileError);
    try {
        (void)parse_language("letters: a\n\nregex: a\nneutral-hint: z\n");
        FAIL("expected an error");
    } catch (const LanguageFileError& e) {
        CHECK(e.line == 4);
    }
}
