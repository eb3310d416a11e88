#ifndef SEMIKIT_EXCEPTION_HPP_
#define SEMIKIT_EXCEPTION_HPP_

#include <stdexcept>
#include <string>

namespace semikit {

// Malformed input: bad letters, out-of-range indices, broken invariants in
// loaded files. Maps to CLI exit code 3.
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(std::string const& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was hit (search space too large, step limit
// exhausted where no partial verdict is possible). Maps to CLI exit code 2.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(std::string const& msg) : std::runtime_error(msg) {}
};

}  // namespace semikit

#endif  // SEMIKIT_EXCEPTION_HPP_
