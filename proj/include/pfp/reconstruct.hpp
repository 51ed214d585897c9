#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfp/palindromes.hpp"
#include "pfp/restriction_graph.hpp"
#include "pfp/text.hpp"

namespace pfp {

// Why a fingerprint admits no preimage. A self-loop is the graph-level
// certificate; a round-trip mismatch means the greedy preimage exists but
// fingerprints differently (never observed for well-formed inputs, kept as a
// runtime check of the bijection).
struct ValidationReport {
    enum class Reason { none, self_loop, round_trip_mismatch };

    bool valid = false;
    Reason reason = Reason::none;
    std::optional<ConstraintPair> self_loop_witness;
    std::vector<PalDescriptor> extra_pairs;   // in PF(reconstruction) \ f
    std::vector<PalDescriptor> missing_pairs; // in f \ PF(reconstruction)

    std::string describe() const;
};

class InvalidFingerprintError : public Error {
public:
    InvalidFingerprintError(const std::string& msg, ValidationReport report)
        : Error(msg), report(std::move(report)) {}
    ValidationReport report;
};

// Decides reconstructibility. Invalid inputs get a reasoned report rather
// than an exception; DuplicateCenterError still propagates (such inputs are
// malformed below the level this report describes).
ValidationReport validate(const Fingerprint& f);

// Lexicographically smallest canonical preimage over a minimal alphabet:
// vertices in class-minimum order each take the smallest color unused by
// already-colored neighbors. Throws InvalidFingerprintError.
Text greedy_reconstruct(const Fingerprint& f);

// A preimage over exactly k distinct symbols. Starting from the greedy
// coloring, repeatedly pick the smallest color id shared by two or more
// vertices and give the member with the largest class minimum a fresh
// color; canonicalize at the end. Throws InvalidFingerprintError, or
// OutOfRangeError when k is outside [sigma(f), vertex count].
Text reconstruct_exact_k(const Fingerprint& f, int k);

// Reads the coloring a preimage induces on its own restriction graph.
// Throws InconsistentTextError if one class carries two symbols.
Coloring string_to_coloring(const Text& t, const RestrictionGraph& g);

// Writes each position's class color; inverse of string_to_coloring up to
// parameterized match.
Text coloring_to_string(const Coloring& c);

// Reconstruction degree: the minimal alphabet size over all preimages
// (greedy is minimal, so this is the greedy alphabet size and equals the
// chromatic number of the restriction graph). Throws InvalidFingerprintError.
int sigma(const Fingerprint& f);

} // namespace pfp
