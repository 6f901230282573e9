#pragma once

#include <cstdint>
#include <span>

#include "infix/alphabet.hpp"
#include "infix/errors.hpp"

namespace infix {

/// Dynamic membership: maintains a word of fixed length under substitutions
/// and answers whether it belongs to L.
class MembershipOracle {
public:
    virtual ~MembershipOracle() = default;
    virtual void update(Pos i, Letter a) = 0;
    [[nodiscard]] virtual bool test() const noexcept = 0;
    /// Rebuilds the whole structure from word (0-based).
    virtual void resync(std::span<const Letter> word) = 0;
    [[nodiscard]] virtual Pos size() const noexcept = 0;
    [[nodiscard]] virtual std::uint64_t checksum() const noexcept = 0;
    [[nodiscard]] virtual std::size_t cells() const noexcept = 0;

    /// An enumeration session holds the lease while it mutates the structure.
    [[nodiscard]] bool leased() const noexcept { return leased_; }
    void acquire() {
        INFIX_CHECK(!leased_);
        leased_ = true;
    }
    void release() noexcept { leased_ = false; }

private:
    bool leased_ = false;
};

}  // namespace infix
