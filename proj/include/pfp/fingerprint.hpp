#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pfp/errors.hpp"

namespace pfp {

// One maximal palindrome, as an inclusive 1-based interval. end == start - 1
// encodes the empty palindrome sitting at an even center (between two
// positions); such descriptors appear only in center tables, never in
// fingerprints.
struct PalDescriptor {
    int start = 1;
    int end = 0;

    int length() const { return end - start + 1; }
    // Twice the center, i.e. start + end. Integral for every descriptor,
    // including even-length and empty ones whose center is a half-integer.
    int center_key() const { return start + end; }

    auto operator<=>(const PalDescriptor&) const = default;
};

// The maximal palindrome at each of the 2n-1 centers of a length-n string,
// lengths 0 and 1 included. Entry k holds the center with key k+2 (keys run
// 2..2n); even keys are odd-length centers, odd keys are gaps.
struct CenterTable {
    int n = 0;
    std::vector<PalDescriptor> entries;

    const PalDescriptor& at_key(int center_key) const;
};

// A string length together with the set of its maximal palindromes of
// length >= 2, sorted by (start, end) with no exact duplicates.
struct Fingerprint {
    int n = 0;
    std::vector<PalDescriptor> pairs;

    // Validates 1 <= start < end <= n, sorts, and rejects duplicates.
    static Fingerprint make(int n, std::vector<PalDescriptor> pairs);

    bool contains(const PalDescriptor& p) const;

    auto operator<=>(const Fingerprint&) const = default;
};

// FPRINT v1: '#' comment lines, one "n <N>" line, then "<i> <j>" lines in
// any order. Throws ParseError / RangeError / DuplicatePairError.
Fingerprint parse_fingerprint(const std::string& input);

// Emits the normalized form: "n <N>" then sorted pairs, LF line endings.
std::string serialize_fingerprint(const Fingerprint& f);

std::string to_string(const PalDescriptor& p);

} // namespace pfp
