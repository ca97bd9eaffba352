#include "cyclecheck/graph6.hpp"

namespace cyc {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    // 18-bit form for 63 <= n <= 258047; capacity keeps us well below that
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) {
    base = kHeader.size();
    line.remove_prefix(kHeader.size());
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6ParseError("graph6: empty input", base);

  auto value_at = [&](std::size_t pos) -> int {
    if (pos >= line.size()) throw Graph6ParseError("graph6: truncated input", base + line.size());
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw Graph6ParseError("graph6: byte out of range 63..126", base + pos);
    return c - 63;
  };

  std::size_t pos = 0;
  long long n = 0;
  if (line[0] != '~') {
    n = value_at(pos++);
  } else {
    ++pos;
    if (pos < line.size() && line[pos] == '~')
      throw Graph6ParseError("graph6: 8-byte order form not supported", base + pos);
    if (line.size() < 4) throw Graph6ParseError("graph6: truncated length prefix", base + line.size());
    n = (static_cast<long long>(value_at(pos)) << 12) |
        (static_cast<long long>(value_at(pos + 1)) << 6) | value_at(pos + 2);
    pos += 3;
  }
  if (n > kMaxVertices)
    throw CapacityError("graph6: order " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxVertices));

  const long long pairs = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (line.size() - pos < need)
    throw Graph6ParseError("graph6: truncated adjacency data", base + line.size());
  if (line.size() - pos > need)
    throw Graph6ParseError("graph6: trailing bytes after adjacency data", base + pos + need);

  Graph g(static_cast<int>(n));
  long long bitindex = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bitindex) {
      int word = value_at(pos + static_cast<std::size_t>(bitindex / 6));
      if ((word >> (5 - bitindex % 6)) & 1) g.add_edge(i, j);
    }
  }
  // padding bits must be zero
  for (long long b = bitindex; b < static_cast<long long>(need) * 6; ++b) {
    int word = value_at(pos + static_cast<std::size_t>(b / 6));
    if ((word >> (5 - b % 6)) & 1)
      throw Graph6ParseError("graph6: nonzero padding bits", base + pos + static_cast<std::size_t>(b / 6));
  }
  return g;
}

}  // namespace cyc
