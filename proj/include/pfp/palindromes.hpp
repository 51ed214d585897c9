#pragma once

#include "pfp/fingerprint.hpp"
#include "pfp/text.hpp"

namespace pfp {

// All maximal palindromes of t, one per center, via Manacher's algorithm.
// Runs in O(n); lengths 0 and 1 are included so every center is present.
CenterTable maximal_palindromes(const Text& t);

// The palindromic fingerprint: the center-table entries of length >= 2.
Fingerprint fingerprint_of(const Text& t);

} // namespace pfp
