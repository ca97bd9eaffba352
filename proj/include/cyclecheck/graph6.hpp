#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclecheck/graph.hpp"

namespace cyc {

struct Graph6ParseError : std::runtime_error {
  Graph6ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

/// Encode in graph6: 6-bit big-endian packing of the upper adjacency
/// triangle, column-major, bias 63. Never emits the optional header.
std::string graph6_encode(const Graph& g);

/// Decode one graph6 line. Tolerates an optional ">>graph6<<" header and
/// trailing CR/LF. Malformed input raises Graph6ParseError with the offending
/// byte offset; orders beyond kMaxVertices raise CapacityError.
Graph graph6_decode(std::string_view line);

}  // namespace cyc
