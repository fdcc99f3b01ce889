#pragma once

#include <stdexcept>
#include <string>

namespace treewiener {

/// Bad operation parameter (m = 0, n = 0, src out of range, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Edge-list text that does not follow the line format.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class TreeViolation { Disconnected, Cycle, EdgeCount, Asymmetric, SelfLoop };

inline const char* to_string(TreeViolation v) {
  switch (v) {
    case TreeViolation::Disconnected: return "disconnected";
    case TreeViolation::Cycle: return "cycle";
    case TreeViolation::EdgeCount: return "edge count != vertex count - 1";
    case TreeViolation::Asymmetric: return "asymmetric adjacency";
    case TreeViolation::SelfLoop: return "self-loop";
  }
  return "unknown";
}

/// Graph failed one of the tree invariants.
class NotATreeError : public std::runtime_error {
 public:
  NotATreeError(TreeViolation v, const std::string& detail)
      : std::runtime_error(std::string("not a tree (") + to_string(v) + "): " + detail),
        violation_(v) {}
  TreeViolation violation() const noexcept { return violation_; }

 private:
  TreeViolation violation_;
};

/// Model instance would exceed the configured vertex budget.
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact identity failed: inexact division, case sums not adding up,
/// two construction routes disagreeing. Always a bug, never user error.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace treewiener
