#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace infix {

/// Dense letter identifier, 0..k-1.
using Letter = std::uint8_t;

/// 1-based word position. Position 0 is never a valid position.
using Pos = std::uint32_t;

/// Finite alphabet of printable single-character symbols.
class Alphabet {
public:
    static constexpr std::size_t kMaxLetters = 16;

    Alphabet() = default;
    explicit Alphabet(std::string_view symbols);

    /// Parses a comma separated list such as "a,b,e".
    static Alphabet from_csv(std::string_view csv);

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] char symbol(Letter id) const { return symbols_.at(id); }
    [[nodiscard]] std::optional<Letter> find(char c) const noexcept;
    [[nodiscard]] Letter at(char c) const;
    [[nodiscard]] const std::string& symbols() const noexcept { return symbols_; }

    /// Converts text to letter ids; throws std::invalid_argument on unknown symbols.
    [[nodiscard]] std::vector<Letter> encode(std::string_view text) const;
    [[nodiscard]] std::string decode(std::span<const Letter> word) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
    std::string symbols_;
    std::array<std::int16_t, 256> index_{};
};

using Word = std::vector<Letter>;

/// An infix [l, r] of a word, 1 <= l <= r <= n.
struct Infix {
    Pos l = 0;
    Pos r = 0;
    friend auto operator<=>(const Infix&, const Infix&) = default;
};

/// Bit set over letter ids.
using LetterMask = std::uint32_t;

constexpr LetterMask letter_bit(Letter a) noexcept { return LetterMask{1} << a; }
constexpr bool has_letter(LetterMask m, Letter a) noexcept { return (m >> a) & 1U; }

}  // namespace infix
