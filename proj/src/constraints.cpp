#include "pfp/constraints.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pfp {

std::vector<ConstraintPair> derive_equalities(const Fingerprint& f) {
    std::vector<ConstraintPair> out;
    for (const auto& pal : f.pairs)
        for (int r = 0; pal.start + r < pal.end - r; ++r)
            out.push_back({ConstraintPair::Kind::equality, pal.start + r, pal.end - r});
    return out;
}

std::vector<ConstraintPair> derive_inequalities(const Fingerprint& f) {
    const int n = f.n;
    // Center key -> pair of f at that center (keys run 2..2n).
    std::map<int, PalDescriptor> by_center;
    for (const auto& pal : f.pairs) {
        auto [it, fresh] = by_center.try_emplace(pal.center_key(), pal);
        if (!fresh)
            throw DuplicateCenterError("pairs " + to_string(it->second) + " and " +
                                       to_string(pal) + " share a center");
    }

    std::vector<ConstraintPair> out;
    auto emit = [&](const PalDescriptor& pal) {
        if (pal.start - 1 >= 1 && pal.end + 1 <= n)
            out.push_back({ConstraintPair::Kind::inequality, pal.start - 1, pal.end + 1});
    };

    for (const auto& [key, pal] : by_center)
        emit(pal);
    for (int key = 2; key <= 2 * n; ++key) {
        if (by_center.count(key))
            continue;
        // Odd keys are gaps holding the empty palindrome (p+1, p).
        if (key % 2 == 0)
            emit(PalDescriptor{key / 2, key / 2});
        else
            emit(PalDescriptor{(key + 1) / 2, (key - 1) / 2});
    }
    return out;
}

EqualityPartition::EqualityPartition(int n)
    : n_(n), parent_(static_cast<size_t>(n) + 1), min_(static_cast<size_t>(n) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::iota(min_.begin(), min_.end(), 0);
}

int EqualityPartition::find(int p) const {
    int root = p;
    while (parent_[static_cast<size_t>(root)] != root)
        root = parent_[static_cast<size_t>(root)];
    while (parent_[static_cast<size_t>(p)] != root) {
        int next = parent_[static_cast<size_t>(p)];
        parent_[static_cast<size_t>(p)] = root;
        p = next;
    }
    return root;
}

void EqualityPartition::merge(int p, int q) {
    int a = find(p);
    int b = find(q);
    if (a == b)
        return;
    // Attach the larger root under the smaller; depth stays logarithmic
    // enough at these sizes and keeps min_ maintenance trivial.
    if (min_[static_cast<size_t>(a)] > min_[static_cast<size_t>(b)])
        std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
}

int EqualityPartition::class_min(int p) const {
    return min_[static_cast<size_t>(find(p))];
}

std::vector<std::vector<int>> EqualityPartition::classes() const {
    std::map<int, std::vector<int>> grouped; // keyed by class minimum
    for (int p = 1; p <= n_; ++p)
        grouped[class_min(p)].push_back(p);
    std::vector<std::vector<int>> out;
    out.reserve(grouped.size());
    for (auto& [mn, members] : grouped)
        out.push_back(std::move(members));
    return out;
}

EqualityPartition equality_partition(const Fingerprint& f) {
    EqualityPartition part(f.n);
    for (const auto& c : derive_equalities(f))
        part.merge(c.p, c.q);
    return part;
}

} // namespace pfp
