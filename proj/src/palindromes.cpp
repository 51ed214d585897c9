#include "pfp/palindromes.hpp"

#include <algorithm>

namespace pfp {

CenterTable maximal_palindromes(const Text& t) {
    const auto& s = t.symbols();
    const int n = t.size();
    CenterTable table;
    table.n = n;
    if (n == 0)
        return table;
    table.entries.resize(static_cast<size_t>(2 * n - 1));

    // Odd-length palindromes. d1[i] = radius + 1 around 0-based center i.
    std::vector<int> d1(static_cast<size_t>(n));
    for (int i = 0, l = 0, r = -1; i < n; ++i) {
        int k = (i > r) ? 1 : std::min(d1[static_cast<size_t>(l + r - i)], r - i + 1);
        while (i - k >= 0 && i + k < n && s[static_cast<size_t>(i - k)] == s[static_cast<size_t>(i + k)])
            ++k;
        d1[static_cast<size_t>(i)] = k--;
        if (i + k > r) {
            l = i - k;
            r = i + k;
        }
    }

    // Even-length palindromes. d2[i] = half-length around the gap (i-1, i).
    std::vector<int> d2(static_cast<size_t>(n));
    for (int i = 0, l = 0, r = -1; i < n; ++i) {
        int k = (i > r) ? 0 : std::min(d2[static_cast<size_t>(l + r - i + 1)], r - i + 1);
        while (i - k - 1 >= 0 && i + k < n && s[static_cast<size_t>(i - k - 1)] == s[static_cast<size_t>(i + k)])
            ++k;
        d2[static_cast<size_t>(i)] = k--;
        if (i + k > r) {
            l = i - k - 1;
            r = i + k;
        }
    }

    // Center keys: odd center at 1-based p has key 2p, the gap between p and
    // p+1 has key 2p+1; entry index is key - 2.
    for (int i = 0; i < n; ++i) {
        int p = i + 1;
        int radius = d1[static_cast<size_t>(i)] - 1;
        table.entries[static_cast<size_t>(2 * p - 2)] = PalDescriptor{p - radius, p + radius};
    }
    for (int i = 1; i < n; ++i) {
        int half = d2[static_cast<size_t>(i)];
        // 1-based gap between positions i and i+1; empty when half == 0.
        table.entries[static_cast<size_t>(2 * i - 1)] = PalDescriptor{i - half + 1, i + half};
    }
    return table;
}

Fingerprint fingerprint_of(const Text& t) {
    CenterTable table = maximal_palindromes(t);
    std::vector<PalDescriptor> pairs;
    for (const auto& p : table.entries)
        if (p.length() >= 2)
            pairs.push_back(p);
    std::sort(pairs.begin(), pairs.end());
    return Fingerprint{t.size(), std::move(pairs)};
}

} // namespace pfp
