#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "infix/bench.hpp"
#include "infix/language.hpp"
#include "infix/oracle.hpp"
#include "infix_cli/cli.hpp"

using namespace infix;

namespace {

std::string data(const char* file) { return std::string(INFIX_TEST_DATA) + "/" + file; }

struct Result {
    int code;
    std::string out, err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = infix::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: classify") {
    auto r = invoke({"classify", data("lab.lang")});
    CHECK(r.code == 0);
    CHECK(r.out.find("is_semi_extensible_zg: true\n") != std::string::npos);
    CHECK(r.out.find("is_extensible: false\n") != std::string::npos);
    CHECK(r.out.find("strategy: semiext\n") != std::string::npos);
    CHECK(r.out.find("threshold_in_use: 3\n") != std::string::npos);

    r = invoke({"classify", data("bstar_a.lang")});
    CHECK(r.out.find("is_zg: false\n") != std::string::npos);
    CHECK(r.out.find("strategy: adhoc\n") != std::string::npos);

    r = invoke({"classify", data("astar.lang")});
    CHECK(r.out.find("strategy: oracle-only\n") != std::string::npos);

    CHECK(invoke({"classify", data("missing.lang")}).code == 1);
    CHECK(invoke({}).code == 1);
}

TEST_CASE("cli: run script") {
    auto r = invoke({"run", "--lang", data("astar.lang"), "--word", "aaa", "--sorted", "-e",
                  "enum; sub 2 b; enum; sub 1 b; sub 3 b; enum; count-results; member"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 1\n1 2\n1 3\n2 2\n2 3\n3 3\n1 1\n3 3\n0\nno\n");

    r = invoke({"run", "--lang", data("lab.lang"), "--word", "ab", "-e", "member\nsub 0 a"});
    CHECK(r.code == 1);
    CHECK(r.out == "yes\n");
    CHECK(r.err.find("script line 2: position out of range") != std::string::npos);

    r = invoke({"run", "--lang", data("lab.lang"), "--word", "ab", "-e", "sub 1 z"});
    CHECK(r.code == 1);
    CHECK(r.err.find("script line 1") != std::string::npos);

    CHECK(invoke({"run", "--lang", data("lab.lang"), "--word", "abz", "-e", "enum"}).code == 1);
}

TEST_CASE("cli: sorted output equals the sorted oracle") {
    for (const char* f : {"lab.lang", "laabb.lang", "bstar_a.lang", "odd_a.lang", "contains_a.lang"}) {
        auto lang = load_language(data(f));
        std::string word;
        for (std::size_t i = 0; i < 24; ++i) word += lang.sigma.symbol(static_cast<Letter>((i * 7 + i / 3) % lang.sigma.size()));
        std::ostringstream expect;
        for (auto x : brute_enumerate(lang.dfa, lang.sigma.encode(word))) expect << x.l << ' ' << x.r << '\n';
        auto r = invoke({"run", "--lang", data(f), "--word", word, "--sorted", "-e", "enum"});
        CHECK(r.code == 0);
        CHECK(r.out == expect.str());
    }
}

TEST_CASE("cli: bench") {
    auto out = std::filesystem::temp_directory_path() / "infix_cli_bench.csv";
    auto r = invoke({"bench", "--lang", data("bstar_a.lang"), "--sizes", "1000,10000", "--seed", "3", "--ops", "20",
                  "--out", out.string()});
    REQUIRE(r.code == 0);
    auto rep = parse_csv(out);
    REQUIRE(rep.size() == 2);
    CHECK(rep[0].extra_enum_cells == rep[1].extra_enum_cells);
    CHECK(rep[0].max_delay_ops == rep[1].max_delay_ops);
    std::filesystem::remove(out);

    r = invoke({"bench", "--lang", data("astar.lang"), "--sizes", "100", "--out", out.string()});
    CHECK(r.code == 2);
    r = invoke({"bench", "--lang", data("astar.lang"), "--sizes", "100", "--out", out.string(), "--allow-oracle"});
    CHECK(r.code == 0);
    std::filesystem::remove(out);
}
