#include "cliquecover/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cliquecover {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sixbits(char c, std::size_t offset) {
  auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) throw Graph6Error("byte outside graph6 range [63,126]", offset);
  return u - 63;
}

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view token, long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

bool is_blank_or_comment(std::string_view line) {
  auto tokens = split_ws(line);
  return tokens.empty() || tokens.front().front() == '#';
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_line_end(text);
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw Graph6Error("missing length prefix", pos);

  long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw Graph6Error("8-byte length prefix exceeds supported graph size", pos);
    if (pos + 4 > text.size()) throw Graph6Error("truncated length prefix", text.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sixbits(text[pos + i], pos + i);
    if (n < 63) throw Graph6Error("non-canonical long length prefix", pos);
    pos += 4;
  } else {
    n = sixbits(text[pos], pos);
    pos += 1;
  }
  if (n > Graph::kMaxVertices) throw Graph6Error("graph order exceeds 64 vertices", pos - 1);

  Graph g(static_cast<int>(n));
  const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos < nbytes) throw Graph6Error("truncated adjacency data", text.size());
  if (text.size() - pos > nbytes) throw Graph6Error("trailing garbage", pos + nbytes);

  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      std::size_t offset = pos + k / 6;
      int value = sixbits(text[offset], offset);
      if ((value >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(u, v);
    }
  }
  if (nbits % 6 != 0) {
    std::size_t last = pos + nbytes - 1;
    int pad = static_cast<int>(6 - nbits % 6);
    if (sixbits(text[last], last) & ((1 << pad) - 1)) throw Graph6Error("nonzero padding bits", last);
  }
  for (std::size_t i = pos; i < pos + nbytes; ++i) sixbits(text[i], i);
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("emit_graph6 supports at most 62 vertices, got " + std::to_string(n));
  std::string out(1, static_cast<char>(63 + n));
  int value = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<long, long>> edges;
  long declared = -1;
  long max_label = -1;
  bool first_data = true;
  int line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    auto tokens = split_ws(line);
    long a = 0;
    long b = 0;
    if (first_data && tokens.size() == 1 && parse_int(tokens[0], a)) {
      declared = a;
      first_data = false;
      continue;
    }
    first_data = false;
    if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b) || a < 0 || b < 0)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    edges.emplace_back(a, b);
    max_label = std::max({max_label, a, b});
  }
  long n = declared >= 0 ? declared : max_label + 1;
  if (max_label >= n)
    throw std::invalid_argument("edge list: label " + std::to_string(max_label) + " exceeds vertex count");
  Graph g(static_cast<int>(n));
  for (auto [a, b] : edges) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

std::vector<Graph> parse_graph_corpus(std::string_view text) {
  auto lines = split_lines(text);
  for (auto line : lines) {
    if (is_blank_or_comment(line)) continue;
    auto tokens = split_ws(line);
    long scratch = 0;
    bool numeric = !tokens.empty() && tokens.size() <= 2 &&
                   std::all_of(tokens.begin(), tokens.end(), [&](auto t) { return parse_int(t, scratch); });
    if (numeric) return {parse_edge_list(text)};
    break;
  }
  std::vector<Graph> out;
  for (auto line : lines) {
    auto trimmed = trim_line_end(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    out.push_back(parse_graph6(trimmed));
  }
  return out;
}

}  // namespace cliquecover
