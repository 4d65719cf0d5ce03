#pragma once

#include <stdexcept>
#include <string>

namespace qlie {

// Bad user-supplied data: malformed files, out-of-range indices, unparseable
// expressions, degree budgets that cannot hold the requested computation.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A request the engine refuses on mathematical grounds (e.g. derivation
// checks for non-restricted algebras in characteristic p), as opposed to bad
// input data.
struct unsupported_mode : std::runtime_error {
  explicit unsupported_mode(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qlie
