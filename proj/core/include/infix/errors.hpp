#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infix {

/// Malformed regular expression. offset is a byte offset into the source text.
class SyntaxError : public std::invalid_argument {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : std::invalid_argument("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

struct MonoidTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSemiExtensible : std::logic_error {
    using std::logic_error::logic_error;
};
struct NotExtensible : std::logic_error {
    using std::logic_error::logic_error;
};
struct NoNeutralLetter : std::logic_error {
    using std::logic_error::logic_error;
};
struct UpdateDuringEnumeration : std::logic_error {
    using std::logic_error::logic_error;
};
struct StaleSession : std::logic_error {
    using std::logic_error::logic_error;
};
struct UnsupportedLanguage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violated internal invariant. These are bugs, never input errors.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

[[noreturn]] void internal_failure(const char* expr, const char* file, int line);

}  // namespace infix

#define INFIX_CHECK(cond) \
    do { \
        if (!(cond)) ::infix::internal_failure(#cond, __FILE__, __LINE__); \
    } while (0)
