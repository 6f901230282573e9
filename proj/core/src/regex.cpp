#include "infix/regex.hpp"

#include <cctype>

#include "infix/errors.hpp"

namespace infix {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Alphabet& sigma) : text_(text), sigma_(sigma) {}

    RegexAst run() {
        skip();
        if (pos_ == text_.size()) throw SyntaxError(pos_, "empty expression");
        ast_.root = parse_union();
        skip();
        if (pos_ != text_.size()) fail_at_current();
        return std::move(ast_);
    }

private:
    int add(RegexOp op, std::vector<int> kids = {}, Letter letter = 0) {
        ast_.nodes.push_back(RegexNode{op, letter, std::move(kids)});
        return static_cast<int>(ast_.nodes.size()) - 1;
    }

    [[noreturn]] void fail_at_current() const {
        char c = text_[pos_];
        if (c == '|' || c == '&' || c == '(' || c == ')' || c == '*' || c == '+' || c == '?')
            throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
        throw SyntaxError(pos_, std::string("symbol not in alphabet: '") + c + "'");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[nodiscard]] bool at(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    [[nodiscard]] bool atom_start() {
        skip();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == '(' || c == '.' || c == '~' || sigma_.find(c).has_value();
    }

    int parse_union() {
        std::vector<int> alts{parse_inter()};
        while (at('|')) {
            ++pos_;
            alts.push_back(parse_inter());
        }
        return alts.size() == 1 ? alts[0] : add(RegexOp::Union, std::move(alts));
    }

    int parse_inter() {
        std::vector<int> parts{parse_concat()};
        while (at('&')) {
            ++pos_;
            parts.push_back(parse_concat());
        }
        return parts.size() == 1 ? parts[0] : add(RegexOp::Intersect, std::move(parts));
    }

    int parse_concat() {
        std::vector<int> seq;
        while (atom_start()) seq.push_back(parse_postfix());
        if (seq.empty()) {
            skip();
            if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of expression");
            fail_at_current();
        }
        return seq.size() == 1 ? seq[0] : add(RegexOp::Concat, std::move(seq));
    }

    int parse_postfix() {
        int node = parse_atom();
        for (;;) {
            if (at('*')) node = add(RegexOp::Star, {node});
            else if (at('+')) node = add(RegexOp::Plus, {node});
            else if (at('?')) node = add(RegexOp::Optional, {node});
            else break;
            ++pos_;
        }
        return node;
    }

    int parse_atom() {
        skip();
        char c = text_[pos_];
        if (c == '(') {
            std::size_t open = pos_++;
            int inner = parse_union();
            if (!at(')')) {
                if (pos_ >= text_.size()) throw SyntaxError(open, "unbalanced parenthesis");
                fail_at_current();
            }
            ++pos_;
            return inner;
        }
        ++pos_;
        if (c == '.') return add(RegexOp::Any);
        if (c == '~') return add(RegexOp::Epsilon);
        return add(RegexOp::Letter, {}, sigma_.at(c));
    }

    std::string_view text_;
    const Alphabet& sigma_;
    std::size_t pos_ = 0;
    RegexAst ast_;
};

void render(const RegexAst& ast, int id, const Alphabet& sigma, std::string& out) {
    const RegexNode& n = ast.nodes[static_cast<std::size_t>(id)];
    const char* name = nullptr;
    switch (n.op) {
        case RegexOp::Epsilon: out += "Epsilon"; return;
        case RegexOp::Letter: out += sigma.symbol(n.letter); return;
        case RegexOp::Any: out += "Any"; return;
        case RegexOp::Concat: name = "Concat"; break;
        case RegexOp::Union: name = "Union"; break;
        case RegexOp::Intersect: name = "Intersect"; break;
        case RegexOp::Star: name = "Star"; break;
        case RegexOp::Plus: name = "Plus"; break;
        case RegexOp::Optional: name = "Optional"; break;
    }
    out += name;
    out += '(';
    for (std::size_t i = 0; i < n.kids.size(); ++i) {
        if (i) out += ',';
        render(ast, n.kids[i], sigma, out);
    }
    out += ')';
}

}  // namespace

std::string RegexAst::to_string(const Alphabet& sigma) const {
    std::string out;
    if (root >= 0) render(*this, root, sigma, out);
    return out;
}

RegexAst parse_regex(std::string_view text, const Alphabet& sigma) { return Parser(text, sigma).run(); }

}  // namespace infix
