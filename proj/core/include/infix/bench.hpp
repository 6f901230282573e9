#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "infix/engine.hpp"
#include "infix/language.hpp"

namespace infix {

struct BenchRow {
    std::string language;
    Pos n = 0;
    std::uint64_t seed = 0;
    std::uint64_t preprocess_ops = 0;
    std::uint64_t max_update_ops = 0;
    std::uint64_t max_delay_ops = 0;
    std::uint64_t extra_enum_cells = 0;
    std::uint64_t total_cells = 0;
    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

using BenchReport = std::vector<BenchRow>;

/// How words and substitutions are drawn, and how much of each enumeration
/// is consumed.
struct Workload {
    /// Letter for position i of a word of length n.
    std::function<Letter(Pos i, Pos n, std::mt19937_64& rng)> letter;
    std::uint32_t rounds = 3;
    std::uint32_t updates_per_round = 50;
    /// Stop an enumeration at the first infix starting after left_cap (0: no cap).
    Pos left_cap = 0;
    /// Stop an enumeration after this many infixes (0: no cap).
    std::uint64_t output_cap = 0;
};

/// Uniform letters, 3 rounds of 50 substitutions, left endpoints capped at 8
/// and at most 10^6 outputs per enumeration.
Workload uniform_workload(const Language& lang);

/// Builds the engine, then alternates substitutions and enumerations under
/// the op counter. Deterministic in (language, n, seed, workload).
/// Throws UnsupportedLanguage for the brute-force strategy unless allowed.
BenchRow profile_enumeration(const Language& lang, Pos n, std::uint64_t seed, const Workload& workload,
                             bool allow_oracle = false);

/// Same protocol with the even-odd strategy forced.
BenchRow profile_simple_enum(const Language& lang, Pos n, std::uint64_t seed, const Workload& workload);

inline constexpr const char* kBenchHeader =
    "language,n,seed,preprocess_ops,max_update_ops,max_delay_ops,extra_enum_cells,total_cells";

/// Throws std::invalid_argument for an empty report, std::runtime_error on IO errors.
void emit_csv(const BenchReport& report, std::ostream& out);
void emit_csv(const BenchReport& report, const std::filesystem::path& path);
BenchReport parse_csv(std::istream& in);
BenchReport parse_csv(const std::filesystem::path& path);

}  // namespace infix
