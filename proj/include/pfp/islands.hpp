#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pfp/reconstruct.hpp"

namespace pfp {

// A maximal run of pairwise-connected fingerprint pairs (connected under
// interval intersection), as the covered interval plus the member pairs.
// Positions covered by no pair form trivial islands with no members.
struct Island {
    int start = 0;
    int end = 0;
    std::vector<PalDescriptor> members;

    bool trivial() const { return members.empty(); }

    auto operator<=>(const Island&) const = default;
};

// Island decomposition, sorted by start; islands partition 1..n and no
// fingerprint pair straddles two of them. Requires a valid fingerprint
// (throws InvalidFingerprintError).
std::vector<Island> islands(const Fingerprint& f);

// All ordered descriptor pairs with start1 < start2 <= end1 < end2:
// properly overlapping, neither containing the other.
std::vector<std::pair<PalDescriptor, PalDescriptor>> crossing_pairs(const Fingerprint& f);

// Whether p1 dominates p2, i.e. the center of p2 lies inside p1. Defined
// only for crossing descriptors (throws NotCrossingError otherwise).
bool dominated(const PalDescriptor& p1, const PalDescriptor& p2);

// The representative of each covered position: among the pairs containing
// it that are not contained in any other pair, the one with minimal end.
// Uncovered positions are absent. Requires a valid fingerprint.
std::map<int, PalDescriptor> representatives(const Fingerprint& f);

// Reconstruction degree of the island on its own: constraints whose
// positions all lie inside [start, end], i.e. the member pairs rebased to
// a standalone fingerprint.
int island_sigma(const Fingerprint& f, const Island& isl);

// sigma(f) <= max over islands of island_sigma + 2.
bool check_decomposition_bound(const Fingerprint& f);

// "island <start> <end> members=<count>" lines.
std::string islands_listing(const std::vector<Island>& isls);

// "(s1,e1) x (s2,e2)" lines.
std::string crossing_listing(const std::vector<std::pair<PalDescriptor, PalDescriptor>>& pairs);

} // namespace pfp
