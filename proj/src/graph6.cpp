#include "cospec/graph6.hpp"

#include "cospec/error.hpp"

namespace cospec {

namespace {

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw InvalidArgument("graph6 encoding supports at most " + std::to_string(kGraph6MaxOrder) + " vertices");
  std::string out(1 + body_length(n), static_cast<char>(63));
  out[0] = static_cast<char>(n + 63);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
  return out;
}

Graph decode_graph6(std::string_view code) {
  if (code.empty()) throw ParseError("empty graph6 code", 0);
  for (std::size_t i = 0; i < code.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(code[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", i);
  }
  if (code[0] == 126) throw ParseError("graph6 codes above 62 vertices are not supported", 0);
  const int n = code[0] - 63;
  const std::size_t expected = 1 + body_length(n);
  if (code.size() != expected)
    throw ParseError("graph6 code for " + std::to_string(n) + " vertices needs " + std::to_string(expected) +
                         " bytes, got " + std::to_string(code.size()),
                     std::min(code.size(), expected));
  GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (((code[1 + k / 6] - 63) >> (5 - k % 6)) & 1) b.add_edge(i, j);
  for (; k < 6 * (expected - 1); ++k)
    if (((code[1 + k / 6] - 63) >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding bit", 1 + k / 6);
  return std::move(b).build();
}

}  // namespace cospec
