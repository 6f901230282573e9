#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "infix/alphabet.hpp"
#include "infix/meter.hpp"

namespace infix {

/// Unordered set of positions in 1..n with O(1) insert, erase and count, and
/// traversal in insertion order (not sorted). Storage is an arena of n nodes
/// allocated up front: node i is position i.
class OccurrenceList {
public:
    OccurrenceList() = default;
    explicit OccurrenceList(Pos n);

    void insert(Pos i, Meter* m = nullptr);
    void erase(Pos i, Meter* m = nullptr);
    [[nodiscard]] bool contains(Pos i) const noexcept { return i >= 1 && i <= n_ && present_[i]; }
    [[nodiscard]] std::uint32_t count() const noexcept { return count_; }
    [[nodiscard]] Pos capacity() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t version() const noexcept { return version_; }

    /// Read-only traversal. Any insert or erase invalidates outstanding cursors.
    class Cursor {
    public:
        Cursor() = default;
        /// Next stored position, or nullopt at the end.
        std::optional<Pos> next();
        [[nodiscard]] bool done() const noexcept { return node_ == 0; }

    private:
        friend class OccurrenceList;
        Cursor(const OccurrenceList* list, Pos first) : list_(list), node_(first), version_(list->version_) {}
        const OccurrenceList* list_ = nullptr;
        Pos node_ = 0;
        std::uint64_t version_ = 0;
    };

    [[nodiscard]] Cursor retrieve() const { return Cursor(this, head_); }
    [[nodiscard]] std::vector<Pos> to_vector() const;
    [[nodiscard]] std::uint64_t checksum() const noexcept;
    [[nodiscard]] std::size_t cells() const noexcept { return 3 * (std::size_t{n_} + 1) + 4; }

private:
    Pos n_ = 0;
    Pos head_ = 0;
    Pos tail_ = 0;
    std::uint32_t count_ = 0;
    std::uint64_t version_ = 0;
    std::vector<Pos> prev_;
    std::vector<Pos> next_;
    std::vector<std::uint8_t> present_;
};

/// One occurrence list per letter plus the current word. Position i is in the
/// list of letter a iff word[i] = a.
class LetterIndex {
public:
    LetterIndex() = default;
    LetterIndex(std::span<const Letter> word, std::size_t k, Meter* m = nullptr);

    /// Sets word[i] = a. Returns the previous letter. Constant time.
    Letter apply_substitution(Pos i, Letter a, Meter* m = nullptr);

    [[nodiscard]] Pos size() const noexcept { return static_cast<Pos>(word_.size() - 1); }
    [[nodiscard]] std::size_t letters() const noexcept { return lists_.size(); }
    [[nodiscard]] Letter at(Pos i) const noexcept { return word_[i]; }
    /// 1-based view: word()[0] is padding.
    [[nodiscard]] std::span<const Letter> word() const noexcept { return word_; }
    [[nodiscard]] std::vector<Letter> current_word() const { return {word_.begin() + 1, word_.end()}; }
    [[nodiscard]] const OccurrenceList& list(Letter a) const { return lists_.at(a); }
    [[nodiscard]] std::uint32_t count(Letter a) const { return lists_.at(a).count(); }
    [[nodiscard]] std::uint64_t version() const noexcept { return version_; }
    [[nodiscard]] std::uint64_t checksum() const noexcept;
    [[nodiscard]] std::size_t cells() const noexcept;

    /// Full scan audit of the partition invariant.
    [[nodiscard]] bool audit() const;

private:
    std::vector<Letter> word_;
    std::vector<OccurrenceList> lists_;
    std::uint64_t version_ = 0;
};

}  // namespace infix
