#pragma once

#include <stdexcept>
#include <string>

namespace pfp {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (string or fingerprint file). `position` is
// 1-based: a character index for letter input, a token index for int-token
// input, a line number for fingerprint files.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int position)
        : Error(msg), position(position) {}
    int position;
};

// Fingerprint pair outside 1..n or with i >= j.
class RangeError : public ParseError {
public:
    using ParseError::ParseError;
};

// Exact duplicate pair in a fingerprint file.
class DuplicatePairError : public ParseError {
public:
    using ParseError::ParseError;
};

// Two fingerprint pairs share a palindrome center. Such a fingerprint has
// no preimage; it is rejected when constraints are derived.
class DuplicateCenterError : public Error {
public:
    using Error::Error;
};

// Requested k outside the feasible alphabet range [min_k, max_k].
class OutOfRangeError : public Error {
public:
    OutOfRangeError(const std::string& msg, int min_k, int max_k)
        : Error(msg), min_k(min_k), max_k(max_k) {}
    int min_k;
    int max_k;
};

// A configured cap (enumeration length, vertex count, word size) was exceeded.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Chromatic-number query on a graph whose fingerprint is not reconstructible.
class SelfLoopPresentError : public Error {
public:
    using Error::Error;
};

// Two positions of one equality class carry different symbols.
class InconsistentTextError : public Error {
public:
    using Error::Error;
};

// A coloring handed to DOT export does not belong to the graph.
class ColoringMismatchError : public Error {
public:
    using Error::Error;
};

// Domination query on a pair of descriptors that do not cross.
class NotCrossingError : public Error {
public:
    using Error::Error;
};

} // namespace pfp
