#pragma once

#include <vector>

#include "pfp/fingerprint.hpp"

namespace pfp {

// One positional constraint between positions p < q of a candidate preimage.
struct ConstraintPair {
    enum class Kind { equality, inequality };
    Kind kind = Kind::equality;
    int p = 0;
    int q = 0;

    auto operator<=>(const ConstraintPair&) const = default;
};

// Interior equalities of every pair: (i+r, j-r) for all r with i+r < j-r.
// Self-pairs are skipped; duplicates are left to the consumer to union.
std::vector<ConstraintPair> derive_equalities(const Fingerprint& f);

// Maximality inequalities, one per center. Each center contributes the pair
// of f sitting there, or the trivial palindrome if none does; its one-step
// extension (s-1, e+1) is emitted when both endpoints lie in 1..n.
//
// Emission order: fingerprint pairs first (by center, left to right), then
// trivial centers (left to right). The first constraint that lands inside a
// single equality class becomes the self-loop witness downstream, so this
// order makes witnesses name the violated pair rather than an incidental
// trivial center.
//
// Throws DuplicateCenterError when two pairs of f share a center.
std::vector<ConstraintPair> derive_inequalities(const Fingerprint& f);

// Disjoint-set forest over positions 1..n. Classes are identified by their
// minimum member.
class EqualityPartition {
public:
    explicit EqualityPartition(int n);

    int size() const { return n_; }
    void merge(int p, int q);
    int find(int p) const;
    // Minimum position in p's class.
    int class_min(int p) const;
    // All classes, members sorted, classes ordered by minimum member.
    std::vector<std::vector<int>> classes() const;

private:
    int n_;
    mutable std::vector<int> parent_; // path compression
    std::vector<int> min_;            // per root
};

// Classes of the equality graph induced by f's interior equalities.
EqualityPartition equality_partition(const Fingerprint& f);

} // namespace pfp
