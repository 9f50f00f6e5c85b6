#include "ngtw/graph6.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

namespace ngtw {

namespace {

int sixbits_at(std::string_view text, size_t pos) {
  if (pos >= text.size())
    throw parse_error("graph6: truncated at position " + std::to_string(pos), pos);
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    throw parse_error("graph6: invalid byte " + std::to_string(c) +
                          " at position " + std::to_string(pos),
                      pos);
  return c - 63;
}

// Decodes the size header; returns (n, bytes consumed).
std::pair<long long, size_t> parse_size(std::string_view text) {
  int b0 = sixbits_at(text, 0);
  if (b0 < 63) return {b0, 1};
  // '~': 18-bit form unless followed by another '~' (36-bit form)
  if (text.size() >= 2 && text[1] == '~') {
    long long n = 0;
    for (size_t i = 2; i < 8; ++i) n = (n << 6) | sixbits_at(text, i);
    return {n, 8};
  }
  long long n = 0;
  for (size_t i = 1; i < 4; ++i) n = (n << 6) | sixbits_at(text, i);
  return {n, 4};
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw parse_error("graph6: empty input", 0);
  auto [n, header] = parse_size(text);
  if (n > kMaxParseVertices)
    throw parse_error("graph6: vertex count " + std::to_string(n) +
                          " exceeds supported maximum " +
                          std::to_string(kMaxParseVertices),
                      0);
  const long long pairs = n * (n - 1) / 2;
  const size_t body = static_cast<size_t>((pairs + 5) / 6);
  if (text.size() != header + body) {
    if (text.size() < header + body)
      throw parse_error("graph6: truncated at position " + std::to_string(text.size()),
                        text.size());
    throw parse_error("graph6: trailing data at position " + std::to_string(header + body),
                      header + body);
  }

  Graph g(static_cast<int>(n));
  int u = 0, v = 1;  // walks the pair sequence (0,1),(0,2),(1,2),(0,3),...
  for (size_t i = 0; i < body; ++i) {
    int bits = sixbits_at(text, header + i);
    for (int b = 5; b >= 0; --b) {
      bool set = (bits >> b) & 1;
      if (v >= n) {
        if (set)
          throw parse_error("graph6: nonzero padding at position " +
                                std::to_string(header + i),
                            header + i);
        continue;
      }
      if (set) g.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const long long n = g.n();
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
  int acc = 0, nbits = 0;
  for (int v = 1; v < g.n(); ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

namespace {

// Splits into non-empty whitespace-trimmed lines with 1-based numbers.
std::vector<std::pair<size_t, std::string>> numbered_lines(std::string_view text) {
  std::vector<std::pair<size_t, std::string>> out;
  size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    ++line_no;
    size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string_view::npos) {
      size_t b = line.find_last_not_of(" \t\r");
      out.emplace_back(line_no, std::string(line.substr(a, b - a + 1)));
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

long long parse_int_field(const std::string& tok, size_t line,
                          const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
    throw parse_error("edge list line " + std::to_string(line) + ": bad " +
                          what + " '" + tok + "'",
                      line);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = numbered_lines(text);
  if (lines.empty()) throw parse_error("edge list: empty input", 0);

  std::istringstream header(lines[0].second);
  std::string tok_n, tok_m, extra;
  header >> tok_n >> tok_m;
  if (tok_n.empty() || tok_m.empty() || (header >> extra))
    throw parse_error("edge list line " + std::to_string(lines[0].first) +
                          ": expected header 'n m'",
                      lines[0].first);
  long long n = parse_int_field(tok_n, lines[0].first, "vertex count");
  long long m = parse_int_field(tok_m, lines[0].first, "edge count");
  if (n > kMaxParseVertices)
    throw parse_error("edge list: vertex count " + std::to_string(n) +
                          " exceeds supported maximum " +
                          std::to_string(kMaxParseVertices),
                      lines[0].first);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw parse_error("edge list: header says " + std::to_string(m) +
                          " edges, found " + std::to_string(lines.size() - 1),
                      lines.size());

  Graph g(static_cast<int>(n));
  for (size_t i = 1; i < lines.size(); ++i) {
    size_t line = lines[i].first;
    std::istringstream ls(lines[i].second);
    std::string tu, tv;
    ls >> tu >> tv;
    if (tu.empty() || tv.empty() || (ls >> extra))
      throw parse_error("edge list line " + std::to_string(line) +
                            ": expected 'u v'",
                        line);
    long long u = parse_int_field(tu, line, "endpoint");
    long long v = parse_int_field(tv, line, "endpoint");
    if (u == v)
      throw parse_error("edge list line " + std::to_string(line) +
                            ": loop at vertex " + std::to_string(u),
                        line);
    if (!(u < v))
      throw parse_error("edge list line " + std::to_string(line) +
                            ": endpoints must satisfy u < v",
                        line);
    if (v >= n)
      throw parse_error("edge list line " + std::to_string(line) +
                            ": vertex " + std::to_string(v) + " out of range",
                        line);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw parse_error("edge list line " + std::to_string(line) +
                            ": duplicate edge " + std::to_string(u) + " " +
                            std::to_string(v),
                        line);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v))
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::vector<std::string> split_graph6_lines(std::string_view text) {
  std::vector<std::string> out;
  for (auto& [line_no, line] : numbered_lines(text)) {
    (void)line_no;
    std::string_view v = line;
    if (v.rfind(">>graph6<<", 0) == 0) {
      v.remove_prefix(10);
      if (v.empty()) continue;
    }
    out.emplace_back(v);
  }
  return out;
}

}  // namespace ngtw
