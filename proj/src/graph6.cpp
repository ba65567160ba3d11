#include "distspec/graph6.hpp"

namespace distspec::graph6 {

namespace {

constexpr char kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + kOffset));
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kOffset));
  return out;
}

Graph decode(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw FormatError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw FormatError("graph6: invalid character in '" + std::string(text) + "'");
    }
  }
  if (text[0] == 126) {
    throw FormatError("graph6: orders above 62 are not supported");
  }
  const int n = text[0] - kOffset;
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (text.size() != 1 + body) {
    throw FormatError("graph6: length mismatch for order " + std::to_string(n) +
                      " in '" + std::string(text) + "'");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - kOffset;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (pairs % 6 != 0) {
    const int last = text.back() - kOffset;
    if ((last & ((1 << (6 - pairs % 6)) - 1)) != 0) {
      throw FormatError("graph6: nonzero padding bits");
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> decode_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(decode(line));
  }
  return out;
}

}  // namespace distspec::graph6
