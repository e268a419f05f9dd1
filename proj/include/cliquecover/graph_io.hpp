#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliquecover/graph.hpp"

namespace cliquecover {

/// Malformed graph6 input; offset is the byte position of the problem.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 line. An optional ">>graph6<<" header and a trailing
/// newline are accepted; the 4-byte length prefix is accepted up to 64 vertices.
Graph parse_graph6(std::string_view text);

/// Short-form graph6 encoding; n must be at most 62.
std::string emit_graph6(const Graph& g);

/// Edge list: one "u v" pair per line, '#' comments. A first line holding a
/// single integer fixes the vertex count, otherwise it is 1 + max label.
Graph parse_edge_list(std::string_view text);

/// Reads a corpus: graph6 lines, or a single edge-list graph when the first
/// data line is a pair of integers (or a lone vertex count).
std::vector<Graph> parse_graph_corpus(std::string_view text);

}  // namespace cliquecover
