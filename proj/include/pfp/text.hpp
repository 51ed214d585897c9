#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pfp/errors.hpp"

namespace pfp {

// Alphabet rank. 0..25 render as 'a'..'z', larger ids as decimal tokens.
using Symbol = int;

// An immutable sequence of symbols. Positions are 1-based at every public
// boundary, matching the conventions of the file formats and diagnostics.
class Text {
public:
    Text() = default;
    explicit Text(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    int size() const { return static_cast<int>(symbols_.size()); }
    bool empty() const { return symbols_.empty(); }

    // 1-based access; throws std::out_of_range outside 1..n.
    Symbol at(int pos) const;
    Symbol operator[](int pos) const { return at(pos); }

    const std::vector<Symbol>& symbols() const { return symbols_; }

    // Number of distinct symbols.
    int alphabet_size() const;

    auto operator<=>(const Text&) const = default;

private:
    std::vector<Symbol> symbols_;
};

enum class TextMode {
    letters,    // contiguous [a-z]
    int_tokens, // whitespace-separated non-negative decimals
};

// Relabel symbols by first occurrence: the i-th distinct symbol to appear
// becomes i. The result has the same equality pattern and is the canonical
// (restricted-growth) representative of its parameterized-match class.
Text canonicalize(const Text& t);

// True iff a and b are equal up to a bijective relabeling of symbols.
bool param_match(const Text& a, const Text& b);

// Parse into a Text; throws ParseError on an invalid character/token (with
// its 1-based position). Empty input is the empty text.
Text parse_text(const std::string& input, TextMode mode);

// Inverse of parse_text; letters mode requires all ids <= 25.
std::string serialize_text(const Text& t, TextMode mode);

// Convenience for tests and the CLI: parse lowercase letters.
Text from_letters(const std::string& s);

} // namespace pfp
