#include "infix/monoid_tree.hpp"

#include "infix/errors.hpp"

namespace infix {

MonoidTree::MonoidTree(std::span<const Letter> word, const Monoid& m, Meter* meter)
    : m_(&m), meter_(meter), n_(static_cast<Pos>(word.size())) {
    leaves_ = 1;
    while (leaves_ < word.size()) leaves_ <<= 1;
    tree_.assign(2 * leaves_, m.identity());
    resync(word);
}

void MonoidTree::resync(std::span<const Letter> word) {
    INFIX_CHECK(word.size() == n_);
    for (std::size_t i = 0; i < n_; ++i) tree_[leaves_ + i] = m_->of(word[i]);
    for (std::size_t v = leaves_ - 1; v >= 1; --v) {
        tick(meter_);
        tree_[v] = m_->mul(tree_[2 * v], tree_[2 * v + 1]);
    }
}

void MonoidTree::update(Pos i, Letter a) {
    INFIX_CHECK(i >= 1 && i <= n_);
    std::size_t v = leaves_ + i - 1;
    tick(meter_);
    tree_[v] = m_->of(a);
    for (v >>= 1; v >= 1; v >>= 1) {
        tick(meter_);
        tree_[v] = m_->mul(tree_[2 * v], tree_[2 * v + 1]);
    }
}

std::uint64_t MonoidTree::checksum() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Elem x : tree_) h = (h ^ x) * 1099511628211ULL;
    return h;
}

}  // namespace infix
