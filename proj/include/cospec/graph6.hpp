#pragma once

#include <string>
#include <string_view>

#include "cospec/graph.hpp"

namespace cospec {

/// Largest order with the single-byte graph6 header.
inline constexpr int kGraph6MaxOrder = 62;

std::string encode_graph6(const Graph& g);
/// Strict decoder: rejects wrong lengths, bytes outside 63..126 and nonzero
/// padding bits, reporting the byte offset in the ParseError.
Graph decode_graph6(std::string_view code);

}  // namespace cospec
