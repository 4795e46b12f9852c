#include "mis/codec.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace mis {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::size_t triangle_bits(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }
std::size_t body_length(int n) { return (triangle_bits(n) + 5) / 6; }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw CodecError(CodecErrorKind::kParse, "expected an integer, got '" + std::string(tok) + "'", line);
  }
  return value;
}

/// Edge-list record parser over a sequence of numbered lines.
template <typename NextLine>
std::optional<Graph> parse_edge_list_record(NextLine&& next_line) {
  std::string_view line;
  std::size_t line_no = 0;
  do {
    if (!next_line(line, line_no)) return std::nullopt;
  } while (is_blank(line));

  const auto header = tokens(line);
  if (header.size() != 2) throw CodecError(CodecErrorKind::kParse, "header must be 'n m'", line_no);
  const long long n = parse_int(header[0], line_no);
  const long long m = parse_int(header[1], line_no);
  if (n < 0 || m < 0) throw CodecError(CodecErrorKind::kParse, "negative count in header", line_no);
  if (n > kMaxOrder) {
    throw CodecError(CodecErrorKind::kOrderTooLarge, "order " + std::to_string(n) + " exceeds 64", line_no);
  }
  const std::size_t header_line = line_no;

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (static_cast<long long>(edges.size()) < m) {
    if (!next_line(line, line_no)) {
      throw CodecError(CodecErrorKind::kEdgeCount,
                       "header declares " + std::to_string(m) + " edges but input ended after " +
                           std::to_string(edges.size()),
                       header_line);
    }
    const auto tok = tokens(line);
    if (tok.empty()) {
      throw CodecError(CodecErrorKind::kEdgeCount,
                       "blank line after " + std::to_string(edges.size()) + " of " + std::to_string(m) + " edges",
                       line_no);
    }
    if (tok.size() != 2) throw CodecError(CodecErrorKind::kParse, "edge line must be 'u v'", line_no);
    const long long u = parse_int(tok[0], line_no);
    const long long v = parse_int(tok[1], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw CodecError(CodecErrorKind::kInvalidGraph, "edge endpoint outside [0, " + std::to_string(n) + ")",
                       line_no);
    }
    if (u == v) throw CodecError(CodecErrorKind::kInvalidGraph, "loop edge", line_no);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace

std::string_view to_string(CodecErrorKind kind) {
  switch (kind) {
    case CodecErrorKind::kBadCharacter: return "bad-character";
    case CodecErrorKind::kBadLength: return "bad-length";
    case CodecErrorKind::kBadPadding: return "bad-padding";
    case CodecErrorKind::kOrderTooLarge: return "order-too-large";
    case CodecErrorKind::kUnsupportedForm: return "unsupported-form";
    case CodecErrorKind::kParse: return "parse";
    case CodecErrorKind::kEdgeCount: return "edge-count";
    case CodecErrorKind::kInvalidGraph: return "invalid-graph";
  }
  return "unknown";
}

CodecError::CodecError(CodecErrorKind kind, const std::string& what, std::size_t line)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + what),
      kind_(kind),
      detail_(what),
      line_(line) {}

Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.starts_with(">>sparse6<<") || text.starts_with(">>digraph6<<") ||
      (!text.empty() && (text.front() == ':' || text.front() == ';' || text.front() == '&'))) {
    throw CodecError(CodecErrorKind::kUnsupportedForm, "sparse6 and digraph6 input are not supported");
  }
  if (text.empty()) throw CodecError(CodecErrorKind::kBadLength, "empty graph6 record");
  for (char c : text) {
    const int value = static_cast<unsigned char>(c);
    if (value < kOffset || value > kMaxByte) {
      throw CodecError(CodecErrorKind::kBadCharacter, "byte " + std::to_string(value) + " outside 63..126");
    }
  }
  if (text.front() == kMaxByte) {
    throw CodecError(CodecErrorKind::kUnsupportedForm, "long-form graph6 (order above 62) is not supported");
  }

  const int n = text.front() - kOffset;
  const std::string_view body = text.substr(1);
  if (body.size() != body_length(n)) {
    throw CodecError(CodecErrorKind::kBadLength, "order " + std::to_string(n) + " needs " +
                                                     std::to_string(body_length(n)) + " data bytes, found " +
                                                     std::to_string(body.size()));
  }

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int group = body[k / 6] - kOffset;
      if ((group >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  for (; k < body.size() * 6; ++k) {
    if (((body[k / 6] - kOffset) >> (5 - k % 6)) & 1) {
      throw CodecError(CodecErrorKind::kBadPadding, "nonzero padding bits after the last edge bit");
    }
  }
  return b.build();
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw CodecError(CodecErrorKind::kOrderTooLarge, "graph6 short form holds at most 62 vertices, got " +
                                                         std::to_string(n));
  }
  std::string out(1 + body_length(n), static_cast<char>(kOffset));
  out[0] = static_cast<char>(n + kOffset);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    }
  }
  return out;
}

Graph read_edge_list(std::string_view text) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  auto next_line = [&](std::string_view& line, std::size_t& number) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    line = text.substr(pos, end - pos);
    pos = end + 1;
    number = ++line_no;
    return true;
  };
  auto g = parse_edge_list_record(next_line);
  if (!g) throw CodecError(CodecErrorKind::kParse, "empty edge list", 1);
  std::string_view rest;
  std::size_t rest_no = 0;
  while (next_line(rest, rest_no)) {
    if (!is_blank(rest)) {
      throw CodecError(CodecErrorKind::kEdgeCount, "more edge lines than the header declares", rest_no);
    }
  }
  return *g;
}

std::string write_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::ostringstream os;
  os << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  if (name == "edgelist" || name == "edge-list") return GraphFormat::kEdgeList;
  return std::nullopt;
}

GraphStream::GraphStream(std::istream& in, GraphFormat format, std::string source)
    : in_(in), format_(format), source_(std::move(source)) {}

bool GraphStream::read_line(std::string& line) {
  if (!std::getline(in_, line)) return false;
  ++line_no_;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::optional<Graph> GraphStream::next() {
  auto g = format_ == GraphFormat::kGraph6 ? next_graph6() : next_edge_list();
  if (g) ++count_;
  return g;
}

std::optional<Graph> GraphStream::next_graph6() {
  std::string line;
  std::size_t first_blank = 0;
  while (read_line(line)) {
    if (is_blank(line)) {
      if (first_blank == 0) first_blank = line_no_;
      continue;
    }
    if (first_blank != 0) throw CodecError(CodecErrorKind::kParse, "blank line inside graph6 stream", first_blank);
    try {
      return graph6_decode(line);
    } catch (const CodecError& e) {
      throw e.at_line(line_no_);
    }
  }
  return std::nullopt;
}

std::optional<Graph> GraphStream::next_edge_list() {
  std::string buffer;
  auto next_line = [&](std::string_view& line, std::size_t& number) {
    if (!read_line(buffer)) return false;
    line = buffer;
    number = line_no_;
    return true;
  };
  return parse_edge_list_record(next_line);
}

}  // namespace mis
