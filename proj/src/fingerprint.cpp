#include "pfp/fingerprint.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pfp {

const PalDescriptor& CenterTable::at_key(int center_key) const {
    if (center_key < 2 || center_key > 2 * n)
        throw std::out_of_range("center key " + std::to_string(center_key) +
                                " outside 2.." + std::to_string(2 * n));
    return entries[static_cast<size_t>(center_key - 2)];
}

Fingerprint Fingerprint::make(int n, std::vector<PalDescriptor> pairs) {
    if (n < 0)
        throw RangeError("negative length " + std::to_string(n), 0);
    std::sort(pairs.begin(), pairs.end());
    for (size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        if (p.start < 1 || p.end > n || p.start >= p.end)
            throw RangeError("pair " + to_string(p) + " outside 1 <= i < j <= " +
                                 std::to_string(n),
                             0);
        if (i > 0 && pairs[i - 1] == p)
            throw DuplicatePairError("duplicate pair " + to_string(p), 0);
    }
    return Fingerprint{n, std::move(pairs)};
}

bool Fingerprint::contains(const PalDescriptor& p) const {
    return std::binary_search(pairs.begin(), pairs.end(), p);
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#')
            return true;
        if (!std::isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true; // blank
}

} // namespace

Fingerprint parse_fingerprint(const std::string& input) {
    std::istringstream in(input);
    std::string line;
    int line_no = 0;
    bool have_n = false;
    long n = 0;
    std::vector<PalDescriptor> pairs;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (is_comment_or_blank(line))
            continue;

        std::istringstream fields(line);
        if (!have_n) {
            std::string key;
            char extra;
            if (!(fields >> key >> n) || key != "n" || n < 0 || (fields >> extra))
                throw ParseError("expected 'n <N>' on line " + std::to_string(line_no),
                                 line_no);
            have_n = true;
            continue;
        }
        long i = 0, j = 0;
        char extra;
        if (!(fields >> i >> j) || (fields >> extra))
            throw ParseError("expected '<i> <j>' on line " + std::to_string(line_no),
                             line_no);
        if (i < 1 || j > n || i >= j)
            throw RangeError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") on line " + std::to_string(line_no) +
                                 " violates 1 <= i < j <= " + std::to_string(n),
                             line_no);
        pairs.push_back(PalDescriptor{static_cast<int>(i), static_cast<int>(j)});
    }
    if (!have_n)
        throw ParseError("missing 'n <N>' header", line_no);

    std::sort(pairs.begin(), pairs.end());
    for (size_t k = 1; k < pairs.size(); ++k)
        if (pairs[k] == pairs[k - 1])
            throw DuplicatePairError("duplicate pair " + to_string(pairs[k]), 0);
    return Fingerprint{static_cast<int>(n), std::move(pairs)};
}

std::string serialize_fingerprint(const Fingerprint& f) {
    std::string out = "n " + std::to_string(f.n) + "\n";
    for (const auto& p : f.pairs)
        out += std::to_string(p.start) + " " + std::to_string(p.end) + "\n";
    return out;
}

std::string to_string(const PalDescriptor& p) {
    return "(" + std::to_string(p.start) + "," + std::to_string(p.end) + ")";
}

} // namespace pfp
