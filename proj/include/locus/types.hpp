// types.hpp -- symbols, words, alphabets, and the error/limit vocabulary
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

#ifndef LOCUS_TYPES_HPP_
#define LOCUS_TYPES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace locus {

/// Malformed input: unknown symbols, invariant violations in files, bad
/// preconditions. Maps to exit code 2 on the command line.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured resource cap was exceeded. Never stands for a wrong verdict;
/// maps to exit code 3 on the command line.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Default resource caps. All of them are explicit errors when exceeded,
// never silent truncation.
inline constexpr std::uint64_t kDefaultSubsetCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;
inline constexpr std::uint64_t kDefaultStatePairCap = std::uint64_t{1} << 22;

/// A letter of the alphabet. The token is an opaque printable string,
/// nonempty, without whitespace; equality is exact token equality.
struct Symbol {
    std::string token;

    Symbol() = default;
    explicit Symbol(std::string t) : token(std::move(t)) {}
    explicit Symbol(const char* t) : token(t) {}

    auto operator<=>(const Symbol&) const = default;
};

/// True iff @p token is a legal symbol token: nonempty, no whitespace,
/// no ASCII control bytes.
bool valid_symbol_token(std::string_view token);

/// A word is a finite sequence of symbols; the empty vector is the empty word.
using Word = std::vector<Symbol>;

/// Length-then-lexicographic order on words, with symbols compared by token.
/// This is the enumeration order used throughout.
bool length_lex_less(const Word& lhs, const Word& rhs);

/// Display form: tokens concatenated, the empty word rendered as a lone
/// epsilon glyph.
std::string to_string(const Word& word);

/// A finite set of symbols, stored sorted by token. Construction validates
/// every token and collapses duplicates.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    const Symbol& at(std::size_t index) const { return symbols_[index]; }

    bool contains(const Symbol& symbol) const;
    /// Position of @p symbol in token order, or nullopt when absent.
    std::optional<std::size_t> index_of(const Symbol& symbol) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<Symbol> symbols_;
};

/// Union of two alphabets.
Alphabet alphabet_union(const Alphabet& lhs, const Alphabet& rhs);

/// Fixed-capacity bitset over state ids 0..size-1. All sets that meet in an
/// operation must have the same capacity.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t bit_count)
        : bit_count_(bit_count), words_((bit_count + 63) / 64, 0) {}

    std::size_t capacity() const { return bit_count_; }

    void set(std::size_t bit) { words_[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
    bool test(std::size_t bit) const {
        return (words_[bit >> 6] >> (bit & 63)) & 1;
    }

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;

    bool intersects(const StateSet& other) const;
    bool is_subset_of(const StateSet& other) const;

    /// Unions a set of the same capacity into this one.
    StateSet& operator|=(const StateSet& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
        return *this;
    }

    bool operator==(const StateSet&) const = default;

    /// Calls @p fn with every member bit in ascending order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int tz = __builtin_ctzll(bits);
                fn(w * 64 + static_cast<std::size_t>(tz));
                bits &= bits - 1;
            }
        }
    }

    std::size_t hash() const;

private:
    std::size_t bit_count_ = 0;
    std::vector<std::uint64_t> words_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& set) const { return set.hash(); }
};

}  // namespace locus

#endif  // LOCUS_TYPES_HPP_
