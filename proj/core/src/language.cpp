#include "infix/language.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "infix/errors.hpp"

namespace infix {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Language Language::from_regex(std::string_view letters_csv, std::string_view regex, std::string name) {
    Language lang;
    lang.name = std::move(name);
    lang.sigma = Alphabet::from_csv(letters_csv);
    lang.regex = std::string(regex);
    lang.dfa = compile_regex(regex, lang.sigma);
    return lang;
}

Language parse_language(std::string_view text, std::string name) {
    std::optional<std::string> letters;
    std::optional<std::pair<std::size_t, std::string>> regex;
    std::optional<std::pair<std::size_t, std::string>> neutral;
    std::optional<std::pair<std::size_t, std::string>> thresh;

    std::size_t line_no = 0;
    std::size_t letters_line = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string_view::npos) throw LanguageFileError(line_no, "expected 'key: value'");
        auto key = trim(line.substr(0, colon));
        auto value = std::string(trim(line.substr(colon + 1)));
        if (key == "letters") {
            letters = value;
            letters_line = line_no;
        } else if (key == "regex") {
            regex = {line_no, value};
        } else if (key == "neutral-hint") {
            neutral = {line_no, value};
        } else if (key == "threshold-hint") {
            thresh = {line_no, value};
        } else {
            throw LanguageFileError(line_no, "unknown key '" + std::string(key) + "'");
        }
    }
    if (!letters) throw LanguageFileError(line_no, "missing 'letters:' line");
    if (!regex) throw LanguageFileError(line_no, "missing 'regex:' line");

    Language lang;
    lang.name = std::move(name);
    try {
        lang.sigma = Alphabet::from_csv(*letters);
    } catch (const std::invalid_argument& e) {
        throw LanguageFileError(letters_line, e.what());
    }
    lang.regex = regex->second;
    try {
        lang.dfa = compile_regex(lang.regex, lang.sigma);
    } catch (const SyntaxError& e) {
        throw LanguageFileError(regex->first, e.what());
    } catch (const std::invalid_argument& e) {
        throw LanguageFileError(regex->first, e.what());
    }
    if (neutral) {
        LetterMask mask = 0;
        std::string_view rest = neutral->second;
        try {
            if (!trim(rest).empty())
                for (char c : Alphabet::from_csv(rest).symbols()) mask |= letter_bit(lang.sigma.at(c));
        } catch (const std::invalid_argument& e) {
            throw LanguageFileError(neutral->first, e.what());
        }
        lang.neutral_hint = mask;
    }
    if (thresh) {
        std::uint32_t p = 0;
        const std::string& s = thresh->second;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
        if (ec != std::errc{} || ptr != s.data() + s.size() || p < 2)
            throw LanguageFileError(thresh->first, "threshold-hint must be an integer >= 2");
        lang.threshold_hint = p;
    }
    return lang;
}

Language load_language(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open language file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_language(buf.str(), path.stem().string());
}

}  // namespace infix
