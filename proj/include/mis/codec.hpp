#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mis/graph.hpp"

namespace mis {

/// Largest order representable by the short graph6 form.
inline constexpr int kGraph6MaxOrder = 62;

enum class CodecErrorKind {
  kBadCharacter,     ///< byte outside 63..126
  kBadLength,        ///< body length does not match the declared order
  kBadPadding,       ///< nonzero bits after the last edge bit
  kOrderTooLarge,    ///< order beyond the short graph6 form
  kUnsupportedForm,  ///< long graph6, sparse6 or digraph6 input
  kParse,            ///< malformed edge-list text
  kEdgeCount,        ///< edge-list header disagrees with the edge lines
  kInvalidGraph,     ///< well-formed text describing an invalid graph
};

std::string_view to_string(CodecErrorKind kind);

/// Decoding or parsing failure. line() is 1-based, or 0 when the input was
/// not read from a line-oriented source.
class CodecError : public std::runtime_error {
 public:
  CodecError(CodecErrorKind kind, const std::string& what, std::size_t line = 0);

  CodecErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

  /// Same error attributed to the given line.
  CodecError at_line(std::size_t line) const { return CodecError(kind_, detail_, line); }

 private:
  CodecErrorKind kind_;
  std::string detail_;
  std::size_t line_;
};

/// Decodes one short-form graph6 record. A leading ">>graph6<<" header and
/// trailing newline characters are ignored.
Graph graph6_decode(std::string_view text);

/// Minimal-length short-form graph6, without header. Throws CodecError
/// (kOrderTooLarge) for n > 62.
std::string graph6_encode(const Graph& g);

/// Parses "n m" followed by exactly m lines "u v". Blank lines are ignored.
Graph read_edge_list(std::string_view text);

/// "n m\n" then one "u v\n" per edge, u < v, ascending.
std::string write_edge_list(const Graph& g);

enum class GraphFormat { kGraph6, kEdgeList };

std::optional<GraphFormat> parse_graph_format(std::string_view name);

/// Line-oriented reader yielding graphs in file order.
///
/// graph6 streams carry one graph per line. Edge-list streams carry
/// consecutive edge-list records, optionally separated by blank lines.
/// Trailing blank lines are ignored; errors carry the offending line number.
class GraphStream {
 public:
  GraphStream(std::istream& in, GraphFormat format, std::string source = "stdin");

  /// Next graph, or nullopt at end of input.
  std::optional<Graph> next();

  /// Graphs yielded so far.
  std::size_t count() const { return count_; }
  /// Last line consumed (1-based).
  std::size_t line() const { return line_no_; }
  const std::string& source() const { return source_; }

 private:
  bool read_line(std::string& line);
  std::optional<Graph> next_graph6();
  std::optional<Graph> next_edge_list();

  std::istream& in_;
  GraphFormat format_;
  std::string source_;
  std::size_t line_no_ = 0;
  std::size_t count_ = 0;
};

}  // namespace mis
