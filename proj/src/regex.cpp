// regex.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "locus/regex.hpp"

#include <set>
#include <string_view>
#include <unordered_set>
#include <utility>

namespace locus {

std::shared_ptr<const RegexNode> make_empty() {
    return std::make_shared<const RegexNode>(RegexNode{RegexKind::empty, {}, {}, {}});
}

std::shared_ptr<const RegexNode> make_epsilon() {
    return std::make_shared<const RegexNode>(RegexNode{RegexKind::epsilon, {}, {}, {}});
}

std::shared_ptr<const RegexNode> make_literal(Symbol sym) {
    return std::make_shared<const RegexNode>(
        RegexNode{RegexKind::literal, std::move(sym), {}, {}});
}

std::shared_ptr<const RegexNode> make_concat(std::shared_ptr<const RegexNode> left,
                                             std::shared_ptr<const RegexNode> right) {
    return std::make_shared<const RegexNode>(
        RegexNode{RegexKind::concat, {}, std::move(left), std::move(right)});
}

std::shared_ptr<const RegexNode> make_union(std::shared_ptr<const RegexNode> left,
                                            std::shared_ptr<const RegexNode> right) {
    return std::make_shared<const RegexNode>(
        RegexNode{RegexKind::alternation, {}, std::move(left), std::move(right)});
}

std::shared_ptr<const RegexNode> make_star(std::shared_ptr<const RegexNode> child) {
    return std::make_shared<const RegexNode>(
        RegexNode{RegexKind::star, {}, std::move(child), {}});
}

namespace {

/// Codepoint-level cursor over UTF-8 input. `pos` is the 1-based index of
/// the next codepoint, whitespace included, as reported in errors.
class Cursor {
public:
    Cursor(std::string_view text, const Alphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    std::size_t pos() const { return pos_; }
    const Alphabet& alphabet() const { return alphabet_; }

    bool at_end() const { return byte_ >= text_.size(); }

    /// The next codepoint as its raw byte span, without consuming it.
    std::string_view peek() const {
        const unsigned char lead = static_cast<unsigned char>(text_[byte_]);
        std::size_t len = 0;
        if (lead < 0x80) {
            len = 1;
        } else if ((lead & 0xE0) == 0xC0) {
            len = 2;
        } else if ((lead & 0xF0) == 0xE0) {
            len = 3;
        } else if ((lead & 0xF8) == 0xF0) {
            len = 4;
        } else {
            throw RegexSyntaxError(pos_, "malformed UTF-8 input");
        }
        if (byte_ + len > text_.size()) {
            throw RegexSyntaxError(pos_, "malformed UTF-8 input");
        }
        return text_.substr(byte_, len);
    }

    std::string_view take() {
        const std::string_view cp = peek();
        byte_ += cp.size();
        ++pos_;
        return cp;
    }

    void skip_ws() {
        while (!at_end()) {
            const std::string_view cp = peek();
            if (cp.size() != 1) return;
            const char c = cp[0];
            if (c != ' ' && c != '\t' && c != '\n' && c != '\r') return;
            take();
        }
    }

private:
    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t byte_ = 0;
    std::size_t pos_ = 1;
};

using NodePtr = std::shared_ptr<const RegexNode>;

NodePtr parse_union_expr(Cursor& in);

NodePtr literal_from(Cursor& in, std::string token, std::size_t at) {
    if (!valid_symbol_token(token)) {
        throw RegexSyntaxError(at, "invalid symbol token '" + token + "'");
    }
    Symbol sym{std::move(token)};
    if (!in.alphabet().contains(sym)) {
        throw RegexSyntaxError(at,
                               "symbol '" + sym.token + "' not in the declared alphabet");
    }
    return make_literal(std::move(sym));
}

NodePtr parse_atom(Cursor& in) {
    in.skip_ws();
    if (in.at_end()) {
        throw RegexSyntaxError(in.pos(), "unexpected end of expression");
    }
    const std::size_t at = in.pos();
    const std::string_view cp = in.peek();
    if (cp == "(") {
        in.take();
        NodePtr inner = parse_union_expr(in);
        in.skip_ws();
        if (in.at_end() || in.peek() != ")") {
            throw RegexSyntaxError(in.pos(), "missing ')'");
        }
        in.take();
        return inner;
    }
    if (cp == ")" || cp == "+" || cp == "*") {
        throw RegexSyntaxError(at, "unexpected '" + std::string(cp) + "'");
    }
    if (cp == "∅") {
        in.take();
        return make_empty();
    }
    if (cp == "ε" || cp == "_") {
        in.take();
        return make_epsilon();
    }
    if (cp == "'") {
        in.take();
        std::string token;
        while (true) {
            if (in.at_end()) {
                throw RegexSyntaxError(at, "unterminated quoted symbol");
            }
            const std::string_view next = in.take();
            if (next == "'") break;
            token.append(next);
        }
        if (token.empty()) {
            throw RegexSyntaxError(at, "empty quoted symbol");
        }
        return literal_from(in, std::move(token), at);
    }
    in.take();
    return literal_from(in, std::string(cp), at);
}

NodePtr parse_factor(Cursor& in) {
    NodePtr node = parse_atom(in);
    while (true) {
        in.skip_ws();
        if (in.at_end() || in.peek() != "*") return node;
        in.take();
        node = make_star(std::move(node));
    }
}

NodePtr parse_concat_expr(Cursor& in) {
    NodePtr node = parse_factor(in);
    while (true) {
        in.skip_ws();
        if (in.at_end()) return node;
        const std::string_view cp = in.peek();
        if (cp == "+" || cp == ")") return node;
        node = make_concat(std::move(node), parse_factor(in));
    }
}

NodePtr parse_union_expr(Cursor& in) {
    NodePtr node = parse_concat_expr(in);
    while (true) {
        in.skip_ws();
        if (in.at_end() || in.peek() != "+") return node;
        in.take();
        node = make_union(std::move(node), parse_concat_expr(in));
    }
}

/// First, last, and follow relations over literal occurrences, numbered
/// 1..m left to right; position 0 is reserved for the start state.
struct PositionSets {
    std::vector<Symbol> symbol_at;  // symbol_at[p - 1] labels position p
    bool nullable = false;
    StateSet first, last;
    std::vector<StateSet> follow;
};

struct SubtreeSets {
    bool nullable;
    StateSet first, last;
};

std::size_t count_positions(const RegexNode& node) {
    switch (node.kind) {
        case RegexKind::empty:
        case RegexKind::epsilon:
            return 0;
        case RegexKind::literal:
            return 1;
        case RegexKind::star:
            return count_positions(*node.left);
        case RegexKind::concat:
        case RegexKind::alternation:
            return count_positions(*node.left) + count_positions(*node.right);
    }
    return 0;
}

SubtreeSets walk(const RegexNode& node, PositionSets& out, StateId& next_position) {
    const std::size_t bits = out.follow.size();
    switch (node.kind) {
        case RegexKind::empty:
            return {false, StateSet(bits), StateSet(bits)};
        case RegexKind::epsilon:
            return {true, StateSet(bits), StateSet(bits)};
        case RegexKind::literal: {
            const StateId p = next_position++;
            out.symbol_at.push_back(node.literal);
            SubtreeSets sets{false, StateSet(bits), StateSet(bits)};
            sets.first.set(p);
            sets.last.set(p);
            return sets;
        }
        case RegexKind::concat: {
            const SubtreeSets lhs = walk(*node.left, out, next_position);
            const SubtreeSets rhs = walk(*node.right, out, next_position);
            lhs.last.for_each([&](std::size_t p) { out.follow[p] |= rhs.first; });
            SubtreeSets sets{lhs.nullable && rhs.nullable, lhs.first, lhs.last};
            if (lhs.nullable) sets.first |= rhs.first;
            sets.last = rhs.last;
            if (rhs.nullable) sets.last |= lhs.last;
            return sets;
        }
        case RegexKind::alternation: {
            SubtreeSets lhs = walk(*node.left, out, next_position);
            const SubtreeSets rhs = walk(*node.right, out, next_position);
            lhs.nullable = lhs.nullable || rhs.nullable;
            lhs.first |= rhs.first;
            lhs.last |= rhs.last;
            return lhs;
        }
        case RegexKind::star: {
            SubtreeSets sets = walk(*node.left, out, next_position);
            sets.last.for_each([&](std::size_t p) { out.follow[p] |= sets.first; });
            sets.nullable = true;
            return sets;
        }
    }
    return {false, StateSet(bits), StateSet(bits)};
}

PositionSets analyze(const RegexNode& root) {
    PositionSets out;
    const std::size_t m = count_positions(root);
    out.follow.assign(m + 1, StateSet(m + 1));
    out.symbol_at.reserve(m);
    StateId next_position = 1;
    const SubtreeSets top = walk(root, out, next_position);
    out.nullable = top.nullable;
    out.first = top.first;
    out.last = top.last;
    return out;
}

Nfa position_automaton(const PositionSets& sets, const Alphabet& alphabet,
                       const std::vector<Symbol>& labels) {
    const StateId states = static_cast<StateId>(sets.symbol_at.size() + 1);
    std::vector<Trans> transitions;
    sets.first.for_each([&](std::size_t p) {
        transitions.push_back({0, labels[p - 1], static_cast<StateId>(p)});
    });
    for (std::size_t p = 1; p < states; ++p) {
        sets.follow[p].for_each([&](std::size_t q) {
            transitions.push_back(
                {static_cast<StateId>(p), labels[q - 1], static_cast<StateId>(q)});
        });
    }
    std::vector<StateId> final_states;
    if (sets.nullable) final_states.push_back(0);
    sets.last.for_each([&](std::size_t p) {
        final_states.push_back(static_cast<StateId>(p));
    });
    return Nfa(alphabet, states, {0}, std::move(final_states), std::move(transitions));
}

/// Subscript rendering of a decimal index, e.g. 12 -> "₁₂".
std::string subscript(std::size_t n) {
    static const char* const digits[10] = {"₀", "₁", "₂", "₃", "₄",
                                           "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (const char c : std::to_string(n)) {
        out += digits[c - '0'];
    }
    return out;
}

struct LengthLexLess {
    bool operator()(const Word& lhs, const Word& rhs) const {
        return length_lex_less(lhs, rhs);
    }
};

using WordSet = std::set<Word, LengthLexLess>;

void check_cap(const WordSet& words, std::uint64_t cap) {
    if (words.size() > cap) {
        throw ResourceLimitError("regex enumeration exceeded the cap of " +
                                 std::to_string(cap) + " words");
    }
}

WordSet bounded_words(const RegexNode& node, std::size_t max_len, std::uint64_t cap) {
    WordSet out;
    switch (node.kind) {
        case RegexKind::empty:
            break;
        case RegexKind::epsilon:
            out.insert(Word{});
            break;
        case RegexKind::literal:
            if (max_len >= 1) out.insert(Word{node.literal});
            break;
        case RegexKind::alternation: {
            out = bounded_words(*node.left, max_len, cap);
            for (Word w : bounded_words(*node.right, max_len, cap)) {
                out.insert(std::move(w));
                check_cap(out, cap);
            }
            break;
        }
        case RegexKind::concat: {
            const WordSet lhs = bounded_words(*node.left, max_len, cap);
            const WordSet rhs = bounded_words(*node.right, max_len, cap);
            for (const Word& u : lhs) {
                for (const Word& v : rhs) {
                    if (u.size() + v.size() > max_len) continue;
                    Word w = u;
                    w.insert(w.end(), v.begin(), v.end());
                    out.insert(std::move(w));
                    check_cap(out, cap);
                }
            }
            break;
        }
        case RegexKind::star: {
            const WordSet base = bounded_words(*node.left, max_len, cap);
            out.insert(Word{});
            std::vector<Word> frontier{Word{}};
            while (!frontier.empty()) {
                std::vector<Word> next;
                for (const Word& u : frontier) {
                    for (const Word& v : base) {
                        if (u.size() + v.size() > max_len) continue;
                        Word w = u;
                        w.insert(w.end(), v.begin(), v.end());
                        if (out.insert(w).second) {
                            check_cap(out, cap);
                            next.push_back(std::move(w));
                        }
                    }
                }
                frontier = std::move(next);
            }
            break;
        }
    }
    return out;
}

}  // namespace

RegexAst parse_regex(const std::string& text, const Alphabet& alphabet) {
    Cursor in(text, alphabet);
    NodePtr root = parse_union_expr(in);
    in.skip_ws();
    if (!in.at_end()) {
        throw RegexSyntaxError(in.pos(),
                               "unexpected '" + std::string(in.peek()) + "'");
    }
    return RegexAst{std::move(root), alphabet};
}

Nfa glushkov(const RegexAst& r) {
    const PositionSets sets = analyze(*r.root);
    return position_automaton(sets, r.alphabet, sets.symbol_at);
}

Nfa marked_automaton(const RegexAst& r) {
    const PositionSets sets = analyze(*r.root);
    std::vector<Symbol> labels;
    std::unordered_set<std::string> used;
    labels.reserve(sets.symbol_at.size());
    for (std::size_t p = 1; p <= sets.symbol_at.size(); ++p) {
        std::string token = sets.symbol_at[p - 1].token + subscript(p);
        while (!used.insert(token).second) token += "_";
        labels.emplace_back(std::move(token));
    }
    return position_automaton(sets, Alphabet(labels), labels);
}

std::vector<Word> regex_semantics_enumerate(const RegexAst& r, std::size_t max_len,
                                            std::uint64_t word_cap) {
    const WordSet words = bounded_words(*r.root, max_len, word_cap);
    return std::vector<Word>(words.begin(), words.end());
}

}  // namespace locus
