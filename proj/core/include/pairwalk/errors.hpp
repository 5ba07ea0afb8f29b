#pragma once

#include <stdexcept>
#include <string>

namespace pairwalk {

// Malformed graph6 text (bad header byte, byte out of range, wrong length,
// nonzero padding). Orders that parse but exceed the supported range throw
// std::invalid_argument instead, so corpus scanners can tell the two apart.
struct graph6_error : std::runtime_error {
  explicit graph6_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exact decision and its floating-point cross-check disagree.
// Callers treat it as an internal failure (CLI exit code 3), never as a
// recoverable input problem.
struct consistency_error : std::runtime_error {
  explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pairwalk
