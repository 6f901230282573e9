#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infix::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kUnsupported = 2;

/// Entry point of infixenum, writing to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a script against a language file and word. Commands are separated
/// by newlines or ';'.
int run_script(const std::string& lang_path, const std::string& word, const std::string& script, bool sorted,
               std::ostream& out, std::ostream& err);

}  // namespace infix::cli
