#include "infix/monoid.hpp"

#include <numeric>
#include <string>

#include "infix/errors.hpp"

namespace infix {

std::size_t Monoid::VecHash::operator()(const std::vector<std::uint16_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto s : v) h = (h ^ s) * 1099511628211ULL;
    return h;
}

Monoid::Monoid(const Dfa& dfa) : k_(dfa.k), states_(dfa.size()), initial_(static_cast<std::uint16_t>(dfa.initial)) {
    if (states_ > 0xFFFF) throw MonoidTooLarge("automaton has too many states");
    std::vector<std::uint16_t> t(states_);
    for (std::size_t q = 0; q < states_; ++q) t[q] = static_cast<std::uint16_t>(q);
    index_.emplace(t, 0);
    trans_ = t;
    size_ = 1;

    std::vector<Elem> parent{0};
    std::vector<Letter> via{0};
    for (Elem x = 0; x < size_; ++x) {
        right_.resize((std::size_t{x} + 1) * k_);
        for (std::size_t a = 0; a < k_; ++a) {
            for (std::size_t q = 0; q < states_; ++q)
                t[q] = static_cast<std::uint16_t>(dfa.delta[std::size_t{trans_[x * states_ + q]} * k_ + a]);
            auto it = index_.find(t);
            Elem y;
            if (it == index_.end()) {
                if (size_ >= kMaxSize)
                    throw MonoidTooLarge("syntactic monoid exceeds " + std::to_string(kMaxSize) + " elements");
                y = static_cast<Elem>(size_++);
                index_.emplace(t, y);
                trans_.insert(trans_.end(), t.begin(), t.end());
                parent.push_back(x);
                via.push_back(static_cast<Letter>(a));
            } else {
                y = it->second;
            }
            right_[x * k_ + a] = y;
        }
    }

    letter_elem_.resize(k_);
    for (std::size_t a = 0; a < k_; ++a) letter_elem_[a] = right_[a];

    acc_.resize(size_);
    for (Elem x = 0; x < size_; ++x) acc_[x] = dfa.accepting[trans_[x * states_ + initial_]];

    if (size_ <= kFullTableLimit) {
        // Elements were discovered breadth-first, so parent[y] < y and
        // x*y = (x*parent[y])*via[y].
        table_.resize(size_ * size_);
        for (Elem x = 0; x < size_; ++x) {
            table_[x * size_] = x;
            for (Elem y = 1; y < size_; ++y) table_[x * size_ + y] = right_[table_[x * size_ + parent[y]] * k_ + via[y]];
        }
    }

    omega_ = idempotent_power(*this);
    neutral_ = neutral_letters(*this);
}

Elem Monoid::lookup(const std::vector<std::uint16_t>& t) const {
    auto it = index_.find(t);
    INFIX_CHECK(it != index_.end());
    return it->second;
}

Elem Monoid::mul(Elem x, Elem y) const {
    if (!table_.empty()) return table_[std::size_t{x} * size_ + y];
    std::vector<std::uint16_t> t(states_);
    for (std::size_t q = 0; q < states_; ++q) t[q] = trans_[std::size_t{y} * states_ + trans_[std::size_t{x} * states_ + q]];
    return lookup(t);
}

Elem Monoid::of(std::span<const Letter> word) const noexcept {
    Elem x = 0;
    for (Letter a : word) x = right_[x * k_ + a];
    return x;
}

Elem Monoid::pow(Elem x, std::uint64_t e) const {
    Elem result = 0;
    Elem base = x;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t idempotent_power(const Monoid& m) {
    // For each x, powers x, x^2, ... are eventually periodic with index i and
    // period c. x^k is idempotent iff k >= i and c divides k.
    std::uint64_t period = 1;
    std::uint64_t index = 1;
    std::unordered_map<Elem, std::uint32_t> seen;
    for (Elem x = 0; x < m.size(); ++x) {
        seen.clear();
        Elem cur = x;
        for (std::uint32_t j = 1;; ++j) {
            auto [it, fresh] = seen.emplace(cur, j);
            if (!fresh) {
                std::uint64_t c = j - it->second;
                index = std::max<std::uint64_t>(index, it->second);
                period = std::lcm(period, c);
                break;
            }
            cur = m.mul(cur, x);
        }
    }
    std::uint64_t w = ((index + period - 1) / period) * period;
    INFIX_CHECK(w <= 0xFFFFFFFFULL);
    return static_cast<std::uint32_t>(w);
}

LetterMask neutral_letters(const Monoid& m) {
    LetterMask mask = 0;
    for (std::size_t a = 0; a < m.letters(); ++a)
        if (m.of(static_cast<Letter>(a)) == m.identity()) mask |= letter_bit(static_cast<Letter>(a));
    return mask;
}

}  // namespace infix
