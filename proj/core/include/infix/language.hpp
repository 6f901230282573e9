#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "infix/alphabet.hpp"
#include "infix/dfa.hpp"

namespace infix {

/// A regular language as loaded from a language file:
///
///   # comment
///   letters: a,b,e
///   regex: e*ae*be*|.*a.*a.*a.*|.*b.*b.*b.*
///   neutral-hint: e        (optional, verified)
///   threshold-hint: 3      (optional, verified)
struct Language {
    std::string name;
    Alphabet sigma;
    std::string regex;
    Dfa dfa;
    std::optional<LetterMask> neutral_hint;
    std::optional<std::uint32_t> threshold_hint;

    static Language from_regex(std::string_view letters_csv, std::string_view regex, std::string name = {});
};

struct LanguageFileError : std::invalid_argument {
    LanguageFileError(std::size_t line, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

Language parse_language(std::string_view text, std::string name = {});
Language load_language(const std::filesystem::path& path);

}  // namespace infix
