#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "specex/graph.hpp"

namespace specex {

/// Malformed graph6 input; `offset` is the byte position within the line.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(size_t offset, const std::string& what)
      : std::runtime_error("graph6 offset " + std::to_string(offset) + ": " +
                           what),
        offset_(offset) {}

  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are tolerated.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding of g (shortest size header, zero padding).
std::string encode_graph6(const Graph& g);

}  // namespace specex
