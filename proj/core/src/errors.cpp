#include "infix/errors.hpp"

namespace infix {

void internal_failure(const char* expr, const char* file, int line) {
    throw InternalError(std::string("internal check failed: ") + expr + " (" + file + ":" + std::to_string(line) + ")");
}

}  // namespace infix
