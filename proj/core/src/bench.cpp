#include "infix/bench.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "infix/errors.hpp"

namespace infix {

Workload uniform_workload(const Language& lang) {
    Workload w;
    const auto k = static_cast<Letter>(lang.sigma.size());
    w.letter = [k](Pos, Pos, std::mt19937_64& rng) {
        return static_cast<Letter>(std::uniform_int_distribution<int>(0, k - 1)(rng));
    };
    w.left_cap = 8;
    w.output_cap = 1'000'000;
    return w;
}

namespace {

BenchRow run_profile(const Language& lang, Pos n, std::uint64_t seed, const Workload& wl,
                     std::optional<Strategy> forced, bool allow_oracle) {
    std::mt19937_64 rng(seed);
    std::vector<Letter> word(n);
    for (Pos i = 1; i <= n; ++i) word[i - 1] = wl.letter(i, n, rng);

    Meter meter;
    std::unique_ptr<Engine> engine =
        forced ? std::make_unique<Engine>(lang, word, *forced, &meter) : std::make_unique<Engine>(lang, word, &meter);
    if (engine->strategy() == Strategy::OracleOnly && !allow_oracle)
        throw UnsupportedLanguage("brute-force strategy has no complexity guarantee");

    BenchRow row;
    row.language = lang.name;
    row.n = n;
    row.seed = seed;
    row.preprocess_ops = meter.ops;

    for (std::uint32_t round = 0; round < wl.rounds; ++round) {
        for (std::uint32_t u = 0; u < wl.updates_per_round; ++u) {
            Pos i = std::uniform_int_distribution<Pos>(1, n)(rng);
            Letter a = wl.letter(i, n, rng);
            meter.reset();
            engine->update(i, a);
            row.max_update_ops = std::max(row.max_update_ops, meter.ops);
        }
        auto cursor = engine->enumerate();
        row.extra_enum_cells = std::max<std::uint64_t>(row.extra_enum_cells, cursor->cells());
        std::uint64_t produced = 0;
        for (;;) {
            meter.reset();
            auto x = cursor->next();
            row.max_delay_ops = std::max(row.max_delay_ops, meter.ops);
            if (!x) break;
            ++produced;
            if (wl.left_cap != 0 && x->l > wl.left_cap) break;
            if (wl.output_cap != 0 && produced >= wl.output_cap) break;
        }
        cursor.reset();
    }
    row.total_cells = engine->cells() + row.extra_enum_cells;
    return row;
}

}  // namespace

BenchRow profile_enumeration(const Language& lang, Pos n, std::uint64_t seed, const Workload& workload,
                             bool allow_oracle) {
    return run_profile(lang, n, seed, workload, std::nullopt, allow_oracle);
}

BenchRow profile_simple_enum(const Language& lang, Pos n, std::uint64_t seed, const Workload& workload) {
    return run_profile(lang, n, seed, workload, Strategy::SimpleOracle, false);
}

void emit_csv(const BenchReport& report, std::ostream& out) {
    if (report.empty()) throw std::invalid_argument("empty bench report");
    out << kBenchHeader << '\n';
    for (const auto& r : report)
        out << r.language << ',' << r.n << ',' << r.seed << ',' << r.preprocess_ops << ',' << r.max_update_ops << ','
            << r.max_delay_ops << ',' << r.extra_enum_cells << ',' << r.total_cells << '\n';
    if (!out) throw std::runtime_error("failed to write bench report");
}

void emit_csv(const BenchReport& report, const std::filesystem::path& path) {
    if (report.empty()) throw std::invalid_argument("empty bench report");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    emit_csv(report, out);
}

BenchReport parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kBenchHeader) throw std::runtime_error("bad bench header");
    BenchReport out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 8) throw std::runtime_error("bad bench row: " + line);
        BenchRow r;
        r.language = cells[0];
        r.n = static_cast<Pos>(std::stoul(cells[1]));
        r.seed = std::stoull(cells[2]);
        r.preprocess_ops = std::stoull(cells[3]);
        r.max_update_ops = std::stoull(cells[4]);
        r.max_delay_ops = std::stoull(cells[5]);
        r.extra_enum_cells = std::stoull(cells[6]);
        r.total_cells = std::stoull(cells[7]);
        out.push_back(std::move(r));
    }
    return out;
}

BenchReport parse_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_csv(in);
}

}  // namespace infix
