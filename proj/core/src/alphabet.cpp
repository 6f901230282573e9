#include "infix/alphabet.hpp"

#include <cctype>
#include <stdexcept>

namespace infix {

Alphabet::Alphabet(std::string_view symbols) {
    index_.fill(-1);
    if (symbols.empty()) throw std::invalid_argument("alphabet must contain at least one letter");
    if (symbols.size() > kMaxLetters) throw std::invalid_argument("alphabet has more than 16 letters");
    for (char c : symbols) {
        auto u = static_cast<unsigned char>(c);
        if (!std::isgraph(u)) throw std::invalid_argument("alphabet symbols must be printable");
        if (c == '|' || c == '*' || c == '+' || c == '?' || c == '(' || c == ')' || c == '~' ||
            c == '.' || c == '&' || c == ',' || c == '#')
            throw std::invalid_argument(std::string("reserved character used as letter: ") + c);
        if (index_[u] >= 0) throw std::invalid_argument(std::string("duplicate letter: ") + c);
        index_[u] = static_cast<std::int16_t>(symbols_.size());
        symbols_.push_back(c);
    }
}

Alphabet Alphabet::from_csv(std::string_view csv) {
    std::string symbols;
    std::size_t i = 0;
    while (i <= csv.size()) {
        std::size_t j = csv.find(',', i);
        if (j == std::string_view::npos) j = csv.size();
        std::string_view item = csv.substr(i, j - i);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (item.size() != 1) throw std::invalid_argument("letters must be single symbols: '" + std::string(item) + "'");
        symbols.push_back(item.front());
        i = j + 1;
    }
    return Alphabet(symbols);
}

std::optional<Letter> Alphabet::find(char c) const noexcept {
    auto v = index_[static_cast<unsigned char>(c)];
    if (v < 0) return std::nullopt;
    return static_cast<Letter>(v);
}

Letter Alphabet::at(char c) const {
    auto id = find(c);
    if (!id) throw std::invalid_argument(std::string("symbol not in alphabet: ") + c);
    return *id;
}

std::vector<Letter> Alphabet::encode(std::string_view text) const {
    std::vector<Letter> out;
    out.reserve(text.size());
    for (char c : text) out.push_back(at(c));
    return out;
}

std::string Alphabet::decode(std::span<const Letter> word) const {
    std::string out;
    out.reserve(word.size());
    for (Letter a : word) out.push_back(symbol(a));
    return out;
}

}  // namespace infix
