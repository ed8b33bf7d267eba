#pragma once

#include <stdexcept>

namespace chief {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input: cycle strings, group files, manifests.
struct ParseError : Error {
  using Error::Error;
};

// Precondition violations: degree mismatch, operand not a subgroup,
// non-prime p, unknown builtin name.
struct DomainError : Error {
  using Error::Error;
};

// A configured resource cap was exceeded (group order, lattice size,
// series enumeration bound).
struct CapExceeded : Error {
  using Error::Error;
};

} // namespace chief
