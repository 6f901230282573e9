#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <string>

#include "infix/engine.hpp"
#include "infix/language.hpp"

namespace {

using namespace infix;

const Language& lang(const char* file) {
    static std::map<std::string, Language> cache;
    auto it = cache.find(file);
    if (it == cache.end())
        it = cache.emplace(file, load_language(std::string(INFIX_BENCH_DATA) + "/" + file)).first;
    return it->second;
}

Word random_word(const Language& l, Pos n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(0, static_cast<int>(l.sigma.size()) - 1);
    Word w(n);
    for (auto& c : w) c = static_cast<Letter>(d(rng));
    return w;
}

// Time for the first 1000 outputs of a fresh enumeration.
void BM_Enumerate(benchmark::State& state, const char* file) {
    const auto& l = lang(file);
    Engine e(l, random_word(l, static_cast<Pos>(state.range(0)), 1));
    for (auto _ : state) {
        auto c = e.enumerate();
        for (int i = 0; i < 1000; ++i) {
            auto x = c->next();
            if (!x) break;
            benchmark::DoNotOptimize(*x);
        }
    }
}

void BM_Update(benchmark::State& state, const char* file) {
    const auto& l = lang(file);
    const auto n = static_cast<Pos>(state.range(0));
    Engine e(l, random_word(l, n, 2));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Pos> pos(1, n);
    std::uniform_int_distribution<int> let(0, static_cast<int>(l.sigma.size()) - 1);
    for (auto _ : state) e.update(pos(rng), static_cast<Letter>(let(rng)));
}

BENCHMARK_CAPTURE(BM_Enumerate, lab, "lab.lang")->Range(1 << 10, 1 << 17);
BENCHMARK_CAPTURE(BM_Enumerate, laabb, "laabb.lang")->Range(1 << 10, 1 << 17);
BENCHMARK_CAPTURE(BM_Enumerate, bstar_a, "bstar_a.lang")->Range(1 << 10, 1 << 17);
BENCHMARK_CAPTURE(BM_Update, lab, "lab.lang")->Range(1 << 10, 1 << 17);
BENCHMARK_CAPTURE(BM_Update, contains_a_tree, "contains_a.lang")->Range(1 << 10, 1 << 17);

}  // namespace

BENCHMARK_MAIN();
