#include "pfp/islands.hpp"

#include <algorithm>

namespace pfp {

namespace {

void require_valid(const Fingerprint& f) {
    ValidationReport report = validate(f);
    if (!report.valid)
        throw InvalidFingerprintError(report.describe(), report);
}

} // namespace

std::vector<Island> islands(const Fingerprint& f) {
    require_valid(f);
    std::vector<Island> out;
    size_t i = 0;
    int next_position = 1;
    // f.pairs is sorted by start, so overlapping pairs merge in one sweep.
    while (i < f.pairs.size()) {
        while (next_position < f.pairs[i].start) {
            out.push_back(Island{next_position, next_position, {}});
            ++next_position;
        }
        Island isl{f.pairs[i].start, f.pairs[i].end, {f.pairs[i]}};
        ++i;
        while (i < f.pairs.size() && f.pairs[i].start <= isl.end) {
            isl.end = std::max(isl.end, f.pairs[i].end);
            isl.members.push_back(f.pairs[i]);
            ++i;
        }
        next_position = isl.end + 1;
        out.push_back(std::move(isl));
    }
    while (next_position <= f.n) {
        out.push_back(Island{next_position, next_position, {}});
        ++next_position;
    }
    return out;
}

std::vector<std::pair<PalDescriptor, PalDescriptor>> crossing_pairs(const Fingerprint& f) {
    std::vector<std::pair<PalDescriptor, PalDescriptor>> out;
    for (const auto& p1 : f.pairs)
        for (const auto& p2 : f.pairs)
            if (p1.start < p2.start && p2.start <= p1.end && p1.end < p2.end)
                out.emplace_back(p1, p2);
    return out;
}

bool dominated(const PalDescriptor& p1, const PalDescriptor& p2) {
    bool crossing = p1.start < p2.start && p2.start <= p1.end && p1.end < p2.end;
    if (!crossing)
        throw NotCrossingError("descriptors " + to_string(p1) + " and " + to_string(p2) +
                               " do not cross");
    // center(p2) in [start(p1), end(p1)], doubled to stay integral.
    return 2 * p1.start <= p2.center_key() && p2.center_key() <= 2 * p1.end;
}

std::map<int, PalDescriptor> representatives(const Fingerprint& f) {
    require_valid(f);
    std::vector<PalDescriptor> maximal;
    for (const auto& p : f.pairs) {
        bool contained = false;
        for (const auto& q : f.pairs)
            if (q != p && q.start <= p.start && p.end <= q.end)
                contained = true;
        if (!contained)
            maximal.push_back(p);
    }
    std::map<int, PalDescriptor> out;
    for (const auto& p : maximal) {
        for (int pos = p.start; pos <= p.end; ++pos) {
            auto [it, fresh] = out.try_emplace(pos, p);
            if (!fresh && p.end < it->second.end)
                it->second = p;
        }
    }
    return out;
}

int island_sigma(const Fingerprint& f, const Island& isl) {
    require_valid(f);
    if (isl.trivial())
        return 1;
    // Rebase the members to a standalone fingerprint over 1..|island|; the
    // standard constraint derivation then keeps exactly the constraints
    // whose positions fall inside the island.
    std::vector<PalDescriptor> rebased;
    rebased.reserve(isl.members.size());
    for (const auto& p : isl.members)
        rebased.push_back(PalDescriptor{p.start - isl.start + 1, p.end - isl.start + 1});
    return sigma(Fingerprint::make(isl.end - isl.start + 1, std::move(rebased)));
}

bool check_decomposition_bound(const Fingerprint& f) {
    int max_island = 0;
    for (const auto& isl : islands(f))
        max_island = std::max(max_island, island_sigma(f, isl));
    return sigma(f) <= max_island + 2;
}

std::string islands_listing(const std::vector<Island>& isls) {
    std::string out;
    for (const auto& isl : isls)
        out += "island " + std::to_string(isl.start) + " " + std::to_string(isl.end) +
               " members=" + std::to_string(isl.members.size()) + "\n";
    return out;
}

std::string crossing_listing(const std::vector<std::pair<PalDescriptor, PalDescriptor>>& pairs) {
    std::string out;
    for (const auto& [p1, p2] : pairs)
        out += to_string(p1) + " x " + to_string(p2) + "\n";
    return out;
}

} // namespace pfp
