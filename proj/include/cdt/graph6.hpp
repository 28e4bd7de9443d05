#ifndef CDT_GRAPH6_HPP
#define CDT_GRAPH6_HPP

// graph6 text encoding: N(n) followed by the upper triangle of the adjacency
// matrix, column by column, packed six bits per printable byte (value + 63).

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cdt/graph.hpp"

namespace cdt {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string graph6_encode(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((g.row(i) >> j) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");

  auto sextet = [&](std::size_t pos) {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
      throw Graph6Error("invalid graph6 byte 0x" + std::to_string(c) + " at offset " +
                        std::to_string(pos));
    }
    return c - 63;
  };

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw Graph6Error("graph6 order exceeds supported range");
    }
    if (text.size() < 4) throw Graph6Error("truncated graph6 order field");
    n = (static_cast<long>(sextet(1)) << 12) | (sextet(2) << 6) | sextet(3);
    if (n < 63) throw Graph6Error("non-canonical graph6 order field");
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds capacity " +
                      std::to_string(kMaxVertices));
  }

  const long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < need) throw Graph6Error("truncated graph6 edge payload");
  if (text.size() - pos > need) throw Graph6Error("trailing bytes after graph6 edge payload");

  std::array<std::uint64_t, kMaxVertices> rows{};
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows(static_cast<int>(n), rows);
}

}  // namespace cdt

#endif  // CDT_GRAPH6_HPP
