#include "fkext/error.hpp"
#include "fkext/graph.hpp"

#include <string>

namespace fkext {
namespace {

constexpr int kBias = 63;
constexpr int kMaxGraph6Order = 62;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("empty graph6 record", 0);
  const int size_byte = static_cast<unsigned char>(line[0]);
  if (size_byte < kBias || size_byte > kBias + kMaxGraph6Order) {
    throw ParseError("unsupported graph6 size byte " + std::to_string(size_byte), 0);
  }
  const int n = size_byte - kBias;
  if (n == 0) throw ParseError("graph6 order 0 is not representable", 0);

  const std::size_t expected = 1 + body_length(n);
  for (std::size_t i = 1; i < line.size(); ++i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < kBias || c > 126) throw ParseError("graph6 character out of range", i);
  }
  if (line.size() != expected) {
    throw ParseError("graph6 record length " + std::to_string(line.size()) + ", expected " +
                         std::to_string(expected),
                     line.size() < expected ? line.size() : expected);
  }

  Graph g(n);
  std::size_t bit = 0;
  auto bit_at = [&](std::size_t index) {
    const int group = static_cast<unsigned char>(line[1 + index / 6]) - kBias;
    return (group >> (5 - index % 6)) & 1;
  };
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (bit_at(bit) != 0) g.add_edge(u, v);
    }
  }
  for (std::size_t pad = bit; pad < body_length(n) * 6; ++pad) {
    if (bit_at(pad) != 0) throw ParseError("nonzero graph6 padding bit", 1 + pad / 6);
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw CapacityError("graph6 encoding supports n <= 62, got " + std::to_string(n));
  std::string out(1 + body_length(n), static_cast<char>(kBias));
  out[0] = static_cast<char>(kBias + n);
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (g.has_edge(u, v)) {
        out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
      }
    }
  }
  return out;
}

}  // namespace fkext
