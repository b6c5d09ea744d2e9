#pragma once

// graph6 reading and writing (single-byte order form, n <= 62).
//
// A word is one size byte n+63 followed by the upper triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte, most significant
// first, zero padded, each group offset by 63.

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bhnlab/graph.hpp"

namespace bhnlab {

inline constexpr int kGraph6MaxOrder = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

class Graph6Error : public std::runtime_error {
public:
  enum class Kind { malformed, unsupported_order };

  Graph6Error(Kind kind, const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  /// 1-based input line, or 0 when the error did not come from a stream.
  std::size_t line() const { return line_; }

private:
  Kind kind_;
  std::size_t line_;
};

namespace detail {
inline std::size_t graph6_payload_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}
}  // namespace detail

inline Graph parse_graph6(std::string_view word) {
  using K = Graph6Error::Kind;
  if (word.empty()) throw Graph6Error(K::malformed, "empty graph6 word");
  for (char c : word) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
      throw Graph6Error(K::malformed, "byte " + std::to_string(b) + " outside [63,126]");
  }

  int n = 0;
  std::size_t pos = 0;
  if (word[0] != '~') {
    n = word[0] - 63;
    pos = 1;
  } else if (word.size() >= 4 && word[1] != '~') {
    n = ((word[1] - 63) << 12) | ((word[2] - 63) << 6) | (word[3] - 63);
    pos = 4;
  } else if (word.size() >= 2 && word[1] == '~') {
    throw Graph6Error(K::unsupported_order, "eight-byte order form is not supported");
  } else {
    throw Graph6Error(K::malformed, "truncated order field");
  }
  if (n > kMaxOrder)
    throw Graph6Error(K::unsupported_order, "order " + std::to_string(n) + " exceeds 64");

  const std::size_t expected = detail::graph6_payload_bytes(n);
  const std::size_t got = word.size() - pos;
  if (got < expected)
    throw Graph6Error(K::malformed, "truncated payload: expected " + std::to_string(expected) +
                                        " bytes, got " + std::to_string(got));
  if (got > expected)
    throw Graph6Error(K::malformed, "trailing bytes after payload: expected " +
                                        std::to_string(expected) + ", got " + std::to_string(got));

  GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int group = word[pos + k / 6] - 63;
      if ((group >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  return b.build();
}

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw Graph6Error(Graph6Error::Kind::unsupported_order,
                      "emit supports order <= 62, got " + std::to_string(n));
  std::string out(1, static_cast<char>(n + 63));
  out.reserve(1 + detail::graph6_payload_bytes(n));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

struct Graph6Record {
  std::string line;
  Graph graph;
  std::size_t line_number;
};

/// Pull-style reader over a line-oriented graph6 stream. A leading ">>graph6<<"
/// header, on its own line or prefixed to the first word, is skipped. Blank lines
/// and trailing '\r' are ignored.
class Graph6Reader {
public:
  enum class Mode { strict, lenient };

  explicit Graph6Reader(std::istream& in, Mode mode = Mode::strict) : in_(in), mode_(mode) {}

  /// Next decoded graph, or nullopt at end of input. In strict mode a malformed line
  /// throws Graph6Error carrying its line number; in lenient mode it is counted and skipped.
  std::optional<Graph6Record> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line_number_ == 1 && line.starts_with(kGraph6Header))
        line.erase(0, kGraph6Header.size());
      if (line.empty()) continue;
      try {
        Graph g = parse_graph6(line);
        return Graph6Record{std::move(line), g, line_number_};
      } catch (const Graph6Error& e) {
        if (mode_ == Mode::strict) throw Graph6Error(e.kind(), e.what(), line_number_);
        ++skipped_;
      }
    }
    return std::nullopt;
  }

  std::size_t skipped() const { return skipped_; }
  std::size_t lines_read() const { return line_number_; }

private:
  std::istream& in_;
  Mode mode_;
  std::size_t line_number_ = 0;
  std::size_t skipped_ = 0;
};

}  // namespace bhnlab
