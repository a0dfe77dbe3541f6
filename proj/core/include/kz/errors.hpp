#pragma once

#include <stdexcept>
#include <string>

namespace kz {

/// Thrown when an enumeration (lcm lattice, graph family, ...) exceeds its
/// configured cap. Callers that can fall back to a streamed enumeration
/// catch this; everyone else should let it surface.
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension / variable-space mismatch between operands.
class space_mismatch_error : public std::invalid_argument {
public:
  explicit space_mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace kz
