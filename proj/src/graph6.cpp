#include "specex/graph6.hpp"

namespace specex {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr long kMaxOrder = 1000000;  // sanity cap, far beyond desk scale

int char_value(std::string_view s, size_t i) {
  if (i >= s.size()) throw Graph6Error(s.size(), "truncated input");
  unsigned char ch = static_cast<unsigned char>(s[i]);
  if (ch < 63 || ch > 126)
    throw Graph6Error(i, "character outside the printable graph6 range");
  return ch - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader)
    text.remove_prefix(kHeader.size());
  while (!text.empty() &&
         (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) throw Graph6Error(0, "empty input");

  size_t pos = 0;
  long n;
  if (text[0] != '~') {
    n = char_value(text, pos++);
  } else if (text.size() >= 2 && text[1] != '~') {
    ++pos;
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | char_value(text, pos++);
  } else {
    pos += 2;
    n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | char_value(text, pos++);
  }
  if (n == 0) throw Graph6Error(0, "graph of order 0 is not supported");
  if (n > kMaxOrder) throw Graph6Error(0, "graph order too large");

  Graph g(static_cast<int>(n));
  long bits = n * (n - 1) / 2;
  long chars = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) < chars)
    throw Graph6Error(text.size(), "truncated adjacency bit field");
  if (static_cast<long>(text.size() - pos) > chars)
    throw Graph6Error(pos + chars, "trailing characters after bit field");

  // Upper triangle in column order, most significant bit first.
  long bit = 0;
  int cur = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      if (bit % 6 == 0) cur = char_value(text, pos++);
      if ((cur >> (5 - bit % 6)) & 1) g.add_edge(row, col);
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }

  int acc = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
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

}  // namespace specex
