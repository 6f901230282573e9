#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "infix/alphabet.hpp"
#include "infix/dfa.hpp"

namespace infix {

using Elem = std::uint32_t;

/// Transition monoid of a minimal DFA, which is its syntactic monoid.
/// Elements are state transformations; element 0 is the identity. The
/// product x*y means "apply x, then y".
class Monoid {
public:
    static constexpr std::size_t kMaxSize = 10000;
    static constexpr std::size_t kFullTableLimit = 2048;

    explicit Monoid(const Dfa& min_dfa);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t letters() const noexcept { return k_; }
    [[nodiscard]] Elem identity() const noexcept { return 0; }
    [[nodiscard]] Elem of(Letter a) const noexcept { return letter_elem_[a]; }
    [[nodiscard]] Elem of(std::span<const Letter> word) const noexcept;
    [[nodiscard]] Elem mul(Elem x, Elem y) const;
    /// x * alpha(a), constant time.
    [[nodiscard]] Elem mul_letter(Elem x, Letter a) const noexcept { return right_[x * k_ + a]; }
    [[nodiscard]] Elem pow(Elem x, std::uint64_t e) const;
    [[nodiscard]] bool accepting(Elem x) const noexcept { return acc_[x] != 0; }
    [[nodiscard]] std::uint32_t omega() const noexcept { return omega_; }
    [[nodiscard]] LetterMask neutral() const noexcept { return neutral_; }
    [[nodiscard]] bool has_full_table() const noexcept { return !table_.empty(); }

    /// Transformation of element x, one target state per DFA state.
    [[nodiscard]] std::span<const std::uint16_t> transformation(Elem x) const noexcept {
        return {trans_.data() + std::size_t{x} * states_, states_};
    }

private:
    [[nodiscard]] Elem lookup(const std::vector<std::uint16_t>& t) const;

    struct VecHash {
        std::size_t operator()(const std::vector<std::uint16_t>& v) const noexcept;
    };

    std::size_t k_;
    std::size_t states_;
    std::size_t size_ = 0;
    std::uint16_t initial_;
    std::vector<std::uint16_t> trans_;
    std::unordered_map<std::vector<std::uint16_t>, Elem, VecHash> index_;
    std::vector<Elem> right_;
    std::vector<Elem> table_;
    std::vector<Elem> letter_elem_;
    std::vector<std::uint8_t> acc_;
    std::uint32_t omega_ = 1;
    LetterMask neutral_ = 0;
};

/// Smallest k >= 1 with x^k idempotent for every x.
std::uint32_t idempotent_power(const Monoid& m);
LetterMask neutral_letters(const Monoid& m);

}  // namespace infix
