#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec::graph6 {

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each
// byte offset by 63. Orders up to 62 use the one-byte N(n).
std::string encode(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing newline.
Graph decode(std::string_view text);

/// One graph per non-empty line.
std::vector<Graph> decode_stream(std::istream& in);

}  // namespace distspec::graph6
