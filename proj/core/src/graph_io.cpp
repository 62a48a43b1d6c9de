#include "frank/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>

namespace frank {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view strip_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int sextet(std::string_view s, std::size_t pos, std::size_t base) {
  if (pos >= s.size()) throw ParseError("graph6: truncated input", base + pos);
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126",
                     base + pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = strip_line_end(text);
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.empty()) throw ParseError("graph6: empty input", base);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  const int first = sextet(text, pos, base);
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
    pos = 1;
  } else {
    std::size_t digits = 3;
    pos = 1;
    if (sextet(text, pos, base) == 63) {
      digits = 6;
      pos = 2;
    }
    for (std::size_t i = 0; i < digits; ++i) {
      n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++, base));
    }
    if ((digits == 3 && n < 63) || (digits == 6 && n < 258048)) {
      throw ParseError("graph6: non-canonical size header", base);
    }
  }
  if (n > (1ULL << 20)) {
    throw ParseError("graph6: vertex count " + std::to_string(n) +
                         " is too large",
                     base);
  }

  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) {
    throw ParseError("graph6: truncated bit stream, expected " +
                         std::to_string(bytes) + " data bytes",
                     base + text.size());
  }
  if (text.size() - pos > bytes) {
    throw ParseError("graph6: trailing garbage", base + pos + bytes);
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text, pos + k / 6, base);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(text, pos + bytes - 1, base);
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) {
      throw ParseError("graph6: nonzero padding bits",
                       base + pos + bytes - 1);
    }
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;

  int acc = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (adj[i][j] ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

namespace {

class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::uint64_t number(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      throw ParseError(std::string("edge list: missing ") + what, start);
    }
    std::uint64_t value = 0;
    const char* b = text_.data() + start;
    const char* e = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(b, e, value);
    if (ec != std::errc{} || ptr != e) {
      throw ParseError(std::string("edge list: invalid ") + what + " '" +
                           std::string(b, e) + "'",
                       start);
    }
    return value;
  }

  std::size_t offset() const noexcept { return pos_; }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  TokenReader in(text);
  const std::uint64_t n = in.number("vertex count");
  const std::uint64_t m = in.number("edge count");
  if (n > (1ULL << 24) || m > (1ULL << 26)) {
    throw ParseError("edge list: header too large", 0);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t u = in.number("endpoint");
    const std::uint64_t v = in.number("endpoint");
    if (u >= n || v >= n) {
      throw GraphError("edge list: edge " + std::to_string(i) + " (" +
                       std::to_string(u) + "," + std::to_string(v) +
                       ") is out of range for n=" + std::to_string(n));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!in.at_end()) throw ParseError("edge list: trailing garbage", in.offset());
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text)
                                       : parse_edge_list(text);
}

}  // namespace frank
