#pragma once

#include <cstddef>
#include <optional>

#include "infix/alphabet.hpp"

namespace infix {

/// Pull-based enumeration of infixes. next() returns nullopt once exhausted.
class InfixCursor {
public:
    virtual ~InfixCursor() = default;
    virtual std::optional<Infix> next() = 0;
    /// Additional memory held by the cursor, in machine words.
    [[nodiscard]] virtual std::size_t cells() const noexcept = 0;
};

}  // namespace infix
