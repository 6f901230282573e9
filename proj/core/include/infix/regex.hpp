#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "infix/alphabet.hpp"

namespace infix {

enum class RegexOp : std::uint8_t { Epsilon, Letter, Any, Concat, Union, Intersect, Star, Plus, Optional };

struct RegexNode {
    RegexOp op = RegexOp::Epsilon;
    Letter letter = 0;
    std::vector<int> kids;
};

/// Arena-allocated syntax tree; nodes[root] is the top.
struct RegexAst {
    std::vector<RegexNode> nodes;
    int root = -1;

    /// Fully parenthesised rendering, e.g. Concat(Star(b),a).
    [[nodiscard]] std::string to_string(const Alphabet& sigma) const;
};

/// Grammar, lowest precedence first:
///   union  := inter ('|' inter)*
///   inter  := concat ('&' concat)*
///   concat := postfix+
///   postfix:= atom ('*' | '+' | '?')*
///   atom   := letter | '.' | '~' | '(' union ')'
/// Whitespace is ignored. '&' is intersection.
RegexAst parse_regex(std::string_view text, const Alphabet& sigma);

}  // namespace infix
