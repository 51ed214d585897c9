#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pfp/reconstruct.hpp"

namespace pfp {

// Default resource caps. Callers (the CLI in particular) may widen or
// narrow them per invocation.
struct Caps {
    static constexpr int zimin_k = 20;          // |zimin(k)| = 2^k - 1
    static constexpr int enumeration_n = 12;    // Bell(12) = 4,213,597
    static constexpr int verification_n = 10;   // Bell(10) = 115,975
    static constexpr int chromatic_vertices = 24;
    static constexpr int selfloop_iff_n = 8;    // center subsets, ~1.7M at n = 8
};

// P_1 = one symbol, P_k = P_{k-1} fresh P_{k-1}; length 2^k - 1.
Text zimin(int k, int max_k = Caps::zimin_k);

// The shortest string whose fingerprint needs k symbols: a fresh symbol,
// then zimin(k-2) over disjoint symbols, then another fresh symbol,
// canonicalized. Length 2^(k-2) + 1. Requires k >= 3.
Text optimal_string(int k, int max_k = Caps::zimin_k);

// Shortest fingerprint length forcing at least k symbols: 1 for k = 1,
// else 2^(k-2) + 1.
long long ipf(int k);

// Exact chromatic number by branch and bound, seeded with a greedy clique
// lower bound and the greedy-coloring upper bound. Deterministic vertex
// order (class minimum). Throws SelfLoopPresentError / ResourceLimitError.
int chromatic_number_exact(const RestrictionGraph& g,
                           int max_vertices = Caps::chromatic_vertices);

// Streams the restricted-growth strings of length n in lexicographic
// order; exactly Bell(n) of them, covering every equality pattern.
class CanonicalStringEnumerator {
public:
    explicit CanonicalStringEnumerator(int n, int max_n = Caps::enumeration_n);
    // Fills `out` with the next string; false once exhausted.
    bool next(Text& out);

private:
    int n_;
    bool first_ = true;
    bool done_ = false;
    std::vector<Symbol> value_;
    std::vector<Symbol> limit_; // limit_[i] = 1 + max of value_[0..i-1]
};

void for_each_canonical_string(int n, const std::function<void(const Text&)>& fn,
                               int max_n = Caps::enumeration_n);

// Deduplicated fingerprints of all canonical strings of length n, sorted.
std::vector<Fingerprint> enumerate_fingerprints(int n, int max_n = Caps::enumeration_n);

struct IpfRow {
    int n = 0;
    int max_sigma = 0;
    int attain_count = 0;
    std::vector<Fingerprint> attaining;
};

struct IpfReport {
    std::vector<IpfRow> rows; // lengths 1..n_max in order

    // Smallest length whose max sigma reaches k; 0 when none does.
    int first_length_reaching(int k) const;
    // Empirical first lengths match the closed form for every k in reach,
    // nothing reaches k early, and max sigma is non-decreasing.
    bool matches_formula() const;

    std::string table() const;
    std::string machine_lines() const;
};

// Exhaustive max-sigma survey over all fingerprints of lengths 1..n_max.
IpfReport verify_ipf(int n_max, int max_n = Caps::verification_n);

struct UniquenessResult {
    bool ok = false;
    Fingerprint expected;               // fingerprint_of(optimal_string(k))
    std::vector<Fingerprint> attaining; // sigma = k at length ipf(k)
};

// Exactly one fingerprint of length ipf(k) needs k symbols, and it is the
// constructed one. Accepts k >= 3 (the construction's domain).
UniquenessResult verify_uniqueness(int k, int max_n = Caps::verification_n);

struct CliqueResult {
    bool ok = false;
    int vertex_count = 0;
    int edge_count = 0;
};

// The restriction graph of fingerprint_of(optimal_string(k)) is complete
// on exactly k vertices.
CliqueResult verify_clique(int k, int max_k = Caps::zimin_k);

struct LogBoundResult {
    bool ok = false;
    long long checked = 0;
    std::vector<Fingerprint> violations;
};

// Every fingerprint of length n in 2..n_max satisfies
// sigma <= log2(n-1) + 2, checked in exact integer form.
LogBoundResult verify_log_bound(int n_max, int max_n = Caps::verification_n);

struct SelfLoopIffResult {
    bool ok = false;
    long long checked = 0;
    std::vector<Fingerprint> disagreements;
};

// Over every pair set with distinct centers for n in 2..n_max: the
// restriction graph has no self-loop iff some string realizes the set as
// its fingerprint.
SelfLoopIffResult verify_selfloop_iff(int n_max, int max_n = Caps::selfloop_iff_n);

struct GreedyMinResult {
    bool ok = false;
    long long checked = 0;
    std::vector<Fingerprint> mismatches;
};

// Greedy alphabet size equals the exact chromatic number for the
// fingerprint of every canonical string of length <= n_max.
GreedyMinResult verify_greedy_min(int n_max, int max_n = Caps::verification_n);

} // namespace pfp
