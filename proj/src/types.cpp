// types.cpp
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

#include "locus/types.hpp"

#include <algorithm>
#include <bit>

namespace locus {

bool valid_symbol_token(std::string_view token) {
    if (token.empty()) {
        return false;
    }
    for (unsigned char c : token) {
        if (c < 0x21 || c == 0x7F) {  // whitespace and control bytes
            return false;
        }
    }
    return true;
}

bool length_lex_less(const Word& lhs, const Word& rhs) {
    if (lhs.size() != rhs.size()) {
        return lhs.size() < rhs.size();
    }
    return lhs < rhs;
}

std::string to_string(const Word& word) {
    if (word.empty()) {
        return "ε";
    }
    std::string out;
    for (const Symbol& sym : word) {
        out += sym.token;
    }
    return out;
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (const Symbol& sym : symbols_) {
        if (!valid_symbol_token(sym.token)) {
            throw InputError("invalid symbol token '" + sym.token +
                             "' (must be nonempty printable text without whitespace)");
        }
    }
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

bool Alphabet::contains(const Symbol& symbol) const {
    return std::binary_search(symbols_.begin(), symbols_.end(), symbol);
}

std::optional<std::size_t> Alphabet::index_of(const Symbol& symbol) const {
    const auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
    if (it == symbols_.end() || *it != symbol) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - symbols_.begin());
}

Alphabet alphabet_union(const Alphabet& lhs, const Alphabet& rhs) {
    std::vector<Symbol> merged = lhs.symbols();
    merged.insert(merged.end(), rhs.symbols().begin(), rhs.symbols().end());
    return Alphabet(std::move(merged));
}

bool StateSet::any() const {
    for (std::uint64_t w : words_) {
        if (w != 0) {
            return true;
        }
    }
    return false;
}

std::size_t StateSet::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool StateSet::intersects(const StateSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return true;
        }
    }
    return false;
}

bool StateSet::is_subset_of(const StateSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    for (std::size_t i = n; i < words_.size(); ++i) {
        if (words_[i] != 0) {
            return false;
        }
    }
    return true;
}

std::size_t StateSet::hash() const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull ^ bit_count_;
    for (std::uint64_t w : words_) {
        h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace locus
