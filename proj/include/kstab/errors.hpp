#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

// Invalid user input (bad degrees, malformed rationals, singular frames, ...).
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded (candidate counts, wall counts).
// The CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Two supposedly-equivalent computation routes disagreed, or a certificate
// failed its exact re-verification.  Always a bug, never a user error.
// The CLI maps this to exit code 4.
class ConsistencyError : public std::runtime_error {
public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kstab
