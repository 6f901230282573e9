#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>

#include "infix/cursor.hpp"
#include "infix/dfa.hpp"
#include "infix/meter.hpp"
#include "infix/occurrence_list.hpp"

namespace infix {

enum class AdhocKind : std::uint8_t {
    BStarA,   // (e|b)* a e*
    ASigmaA,  // e* a .* a e*
    OddA,     // odd number of a's, e neutral
};

const char* to_string(AdhocKind kind) noexcept;

/// Which letter ids play the roles a, b and e. b is unused for two-letter languages.
struct AdhocMatch {
    AdhocKind kind;
    Letter a = 0;
    Letter b = 0;
    Letter e = 0;
};

/// Recognizes the languages above up to a renaming of letters, by comparing
/// minimal automata.
std::optional<AdhocMatch> adhoc_fingerprint(const Dfa& min_dfa);

/// Read-only enumeration over the occurrence list of a. Fails with
/// StaleSession once the index is updated.
class AdhocSession : public InfixCursor {
public:
    AdhocSession(const LetterIndex& index, const AdhocMatch& match, Meter* meter = nullptr);
    std::optional<Infix> next() override;
    [[nodiscard]] std::size_t cells() const noexcept override { return kCells; }

private:
    static constexpr std::size_t kCells = 24;

    bool next_bstar_a(Infix& out);
    bool next_a_sigma_a(Infix& out);
    bool next_odd_a(Infix& out);
    [[nodiscard]] bool is_e(Pos i) const noexcept { return w_[i] == m_.e; }

    const LetterIndex* index_;
    AdhocMatch m_;
    Meter* meter_;
    std::span<const Letter> w_;
    std::uint64_t version_;
    Pos n_;

    OccurrenceList::Cursor outer_, inner_;
    bool have_anchor_ = false;
    Pos i_ = 0, j_ = 0;   // anchor(s)
    Pos lt_ = 0, rt_ = 0; // current level's outer a's
    Pos lp_ = 0, rp_ = 0; // next infix to emit
    Pos rp_max_ = 0;      // known right extent at this level, 0 if unknown
};

}  // namespace infix
