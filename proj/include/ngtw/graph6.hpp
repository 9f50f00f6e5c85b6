#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ngtw/errors.hpp"
#include "ngtw/graph.hpp"

namespace ngtw {

// graph6: printable-ASCII encoding. Byte 0 encodes n as chr(n+63) for
// n <= 62; '~' + 3 bytes (18 bits) for n <= 258047; '~~' + 6 bytes beyond.
// The upper triangle of the adjacency matrix follows, read column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed big-endian into 6-bit
// groups, each emitted as chr(value+63), zero-padded to a multiple of 6.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Accepted vertex-count ceiling for parsed graphs; guards the adjacency
// matrix against absurd headers.
inline constexpr int kMaxParseVertices = 4096;

// Edge list: header line "n m", then m lines "u v" with 0 <= u < v < n.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// One graph6 value per line; blank lines and an optional leading
// ">>graph6<<" file header are skipped.
std::vector<std::string> split_graph6_lines(std::string_view text);

}  // namespace ngtw
