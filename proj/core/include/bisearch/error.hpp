#pragma once

#include <stdexcept>
#include <string>

namespace bisearch {

// Broken internal invariant (e.g. a shorter path to a closed node under a
// heuristic declared consistent). Maps to exit code 3 in the CLI.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// Problems reading or parsing instance files. Maps to exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Bad command line or configuration. Maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Cooperative per-instance timeout (see bench::ScopedDeadline).
class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("instance timed out") {}
};

#define BISEARCH_CHECK(cond, msg)                      \
  do {                                                 \
    if (!(cond)) {                                     \
      throw ::bisearch::InvariantViolation(msg);       \
    }                                                  \
  } while (0)

}  // namespace bisearch
