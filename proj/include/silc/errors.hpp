#pragma once

#include <stdexcept>
#include <string>

namespace silc {

// Bad user-supplied data (invalid type/rank, rank mismatch, precondition
// failure).  CLI maps this to exit code 2.
class input_error : public std::invalid_argument {
public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured budget (BFS frontier, enumeration count, oracle ceiling) was
// exhausted.  CLI maps this to exit code 3.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal exactness assertion failed (non-integral weight, inexact
// division).  Indicates a bug, never bad input.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace silc
