#pragma once

#include <cstdint>
#include <span>

#include "infix/cursor.hpp"
#include "infix/meter.hpp"
#include "infix/membership.hpp"

namespace infix {

/// Even-odd enumeration for extensible languages with a neutral letter e.
/// The session temporarily writes e into the membership tree and restores
/// every leaf by the time it is exhausted. Abandoning a session early
/// restores the tree with an O(n) resync.
class SimpleSession final : public InfixCursor {
public:
    /// word is 1-based (word[0] is padding) and must match the tree.
    SimpleSession(MembershipOracle& psi, std::span<const Letter> word, Letter neutral, Meter* meter = nullptr);
    ~SimpleSession() override;
    SimpleSession(const SimpleSession&) = delete;
    SimpleSession& operator=(const SimpleSession&) = delete;

    std::optional<Infix> next() override;
    /// Session state plus the membership tree it drives; grows with n.
    [[nodiscard]] std::size_t cells() const noexcept override { return kStateCells + psi_->cells(); }
    [[nodiscard]] bool exhausted() const noexcept { return phase_ == Phase::Done; }

private:
    static constexpr std::size_t kStateCells = 10;

    enum class Phase : std::uint8_t { Forward, ForwardAfter, Backward, BackwardAfter, EnumStart, EnumDown, EnumUp, Done };

    void set(Pos i, Letter a);
    void begin_enumerate(Pos l, Phase ret);
    void finish_enumerate(bool produced);

    MembershipOracle* psi_;
    std::span<const Letter> w_;
    Letter e_;
    Meter* meter_;
    Pos n_;
    Phase phase_ = Phase::Forward;
    Phase ret_ = Phase::Done;
    Pos l_ = 1;  // forward/backward left endpoint
    Pos el_ = 0; // left endpoint of the running EnumerateL
    Pos r_ = 0;
    bool produced_ = false;
};

}  // namespace infix
