#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "infix/bench.hpp"
#include "infix/errors.hpp"

using namespace infix;

namespace {
std::string data(const char* file) { return std::string(INFIX_TEST_DATA) + "/" + file; }
}  // namespace

TEST_CASE("bench: csv") {
    BenchReport empty;
    std::ostringstream sink;
    CHECK_THROWS_AS(emit_csv(empty, sink), std::invalid_argument);

    BenchReport one = {{"lab", 1000, 7, 1000, 3, 45, 255, 9000}};
    auto path = std::filesystem::temp_directory_path() / "infix_bench_one.csv";
    emit_csv(one, path);
    std::ifstream in(path);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == kBenchHeader);
    CHECK(lines[1] == "lab,1000,7,1000,3,45,255,9000");
    CHECK(parse_csv(path) == one);
    std::filesystem::remove(path);

    BenchReport two = {one[0], {"odd_a", 100000, 1, 2, 3, 4, 5, 6}};
    std::stringstream ss;
    emit_csv(two, ss);
    CHECK(parse_csv(ss) == two);
}

TEST_CASE("bench: deterministic rows") {
    auto lab = load_language(data("lab.lang"));
    auto wl = uniform_workload(lab);
    auto a = profile_enumeration(lab, 2000, 5, wl);
    auto b = profile_enumeration(lab, 2000, 5, wl);
    CHECK(a == b);
    CHECK(a.n == 2000);
    CHECK(a.max_update_ops > 0);
    CHECK(a.max_delay_ops > 0);
    CHECK(a.total_cells >= a.extra_enum_cells);
}

TEST_CASE("bench: oracle-only refused unless allowed") {
    auto astar = load_language(data("astar.lang"));
    auto wl = uniform_workload(astar);
    CHECK_THROWS_AS((void)profile_enumeration(astar, 100, 1, wl), UnsupportedLanguage);
    CHECK(profile_enumeration(astar, 100, 1, wl, true).n == 100);
}

TEST_CASE("bench: even-odd strategy cells grow with the tree") {
    auto ca = load_language(data("contains_a.lang"));
    auto wl = uniform_workload(ca);
    auto small = profile_simple_enum(ca, 1000, 3, wl);
    auto large = profile_simple_enum(ca, 100000, 3, wl);
    CHECK(large.extra_enum_cells > small.extra_enum_cells);
}
