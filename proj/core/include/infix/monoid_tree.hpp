#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "infix/alphabet.hpp"
#include "infix/membership.hpp"
#include "infix/meter.hpp"
#include "infix/monoid.hpp"

namespace infix {

/// Dynamic membership structure: a complete binary tree whose leaves hold the
/// monoid images of the letters and whose inner nodes hold the product of
/// their children. Updates cost O(log n) monoid products; test() is O(1).
class MonoidTree final : public MembershipOracle {
public:
    MonoidTree(std::span<const Letter> word, const Monoid& m, Meter* meter = nullptr);

    void update(Pos i, Letter a) override;
    [[nodiscard]] bool test() const noexcept override { return m_->accepting(tree_[1]); }
    [[nodiscard]] Elem root() const noexcept { return tree_[1]; }
    [[nodiscard]] Pos size() const noexcept override { return n_; }
    [[nodiscard]] std::uint64_t checksum() const noexcept override;
    [[nodiscard]] std::size_t cells() const noexcept override { return tree_.size() + 4; }
    /// Rebuilds every leaf from word in O(n).
    void resync(std::span<const Letter> word) override;

    void set_meter(Meter* meter) noexcept { meter_ = meter; }


private:
    const Monoid* m_;
    Meter* meter_;
    Pos n_;
    std::size_t leaves_;
    std::vector<Elem> tree_;
};

}  // namespace infix
