#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minorlab {

// Raised when an exact oracle is asked for an instance above its stated
// order budget.  Callers that sweep corpora catch this and mark the graph
// skipped instead of aborting the run.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int order, int limit)
      : std::runtime_error(what), order(order), limit(limit) {}
  int order;
  int limit;
};

// Malformed graph6 input.  offset is the byte position inside the original
// line (header included) where decoding failed.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

}  // namespace minorlab
