#pragma once

#include <stdexcept>
#include <string>

namespace hypercount {

// Malformed user input: bad file lines, bad flags, preconditions on caller data.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A size or budget guard was exceeded; the request is valid but too large.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; indicates a bug and must never be swallowed.
class internal_error : public std::runtime_error {
 public:
  explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypercount
