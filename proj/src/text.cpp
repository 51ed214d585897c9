#include "pfp/text.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace pfp {

Symbol Text::at(int pos) const {
    if (pos < 1 || pos > size())
        throw std::out_of_range("text position " + std::to_string(pos) +
                                " outside 1.." + std::to_string(size()));
    return symbols_[static_cast<size_t>(pos - 1)];
}

int Text::alphabet_size() const {
    std::unordered_set<Symbol> seen(symbols_.begin(), symbols_.end());
    return static_cast<int>(seen.size());
}

Text canonicalize(const Text& t) {
    std::unordered_map<Symbol, Symbol> relabel;
    std::vector<Symbol> out;
    out.reserve(t.symbols().size());
    for (Symbol s : t.symbols()) {
        auto [it, fresh] = relabel.try_emplace(s, static_cast<Symbol>(relabel.size()));
        (void)fresh;
        out.push_back(it->second);
    }
    return Text(std::move(out));
}

bool param_match(const Text& a, const Text& b) {
    if (a.size() != b.size())
        return false;
    return canonicalize(a) == canonicalize(b);
}

Text parse_text(const std::string& input, TextMode mode) {
    std::vector<Symbol> symbols;
    if (mode == TextMode::letters) {
        // Trailing line breaks are tolerated so files and pipes round-trip.
        size_t end = input.size();
        while (end > 0 && (input[end - 1] == '\n' || input[end - 1] == '\r'))
            --end;
        for (size_t i = 0; i < end; ++i) {
            char c = input[i];
            if (c < 'a' || c > 'z')
                throw ParseError("invalid character '" + std::string(1, c) +
                                     "' at position " + std::to_string(i + 1),
                                 static_cast<int>(i + 1));
            symbols.push_back(c - 'a');
        }
        return Text(std::move(symbols));
    }

    std::istringstream in(input);
    std::string token;
    int index = 0;
    while (in >> token) {
        ++index;
        bool ok = !token.empty();
        for (char c : token)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                ok = false;
        if (!ok || token.size() > 9)
            throw ParseError("invalid token '" + token + "' at position " +
                                 std::to_string(index),
                             index);
        symbols.push_back(std::stoi(token));
    }
    return Text(std::move(symbols));
}

std::string serialize_text(const Text& t, TextMode mode) {
    std::string out;
    if (mode == TextMode::letters) {
        for (Symbol s : t.symbols()) {
            if (s < 0 || s > 25)
                throw Error("symbol id " + std::to_string(s) +
                            " not renderable as a letter");
            out.push_back(static_cast<char>('a' + s));
        }
        return out;
    }
    for (size_t i = 0; i < t.symbols().size(); ++i) {
        if (i)
            out.push_back(' ');
        out += std::to_string(t.symbols()[i]);
    }
    return out;
}

Text from_letters(const std::string& s) {
    return parse_text(s, TextMode::letters);
}

} // namespace pfp
