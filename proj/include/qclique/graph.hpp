#pragma once

// Undirected simple graphs, their text formats, and the classical
// brute-force clique routines that serve as ground truth for the quantum
// oracle.

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qclique/error.hpp"

namespace qclique {

using Vertex = std::uint32_t;

/// Undirected, unweighted graph without self-loops, stored as a dense
/// symmetric adjacency matrix. Vertices are 0-based.
class Graph {
 public:
  explicit Graph(std::size_t vertex_count) : n_(vertex_count), adj_(vertex_count * vertex_count, 0) {
    if (vertex_count == 0) throw ArgumentError("graph must have at least one vertex");
  }

  static Graph complete(std::size_t vertex_count) {
    Graph g(vertex_count);
    for (Vertex u = 0; u < vertex_count; ++u)
      for (Vertex v = u + 1; v < vertex_count; ++v) g.add_edge(u, v);
    return g;
  }

  static Graph from_edges(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  /// Adds {u, v}. Adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ArgumentError("self-loop on vertex " + std::to_string(u) + " is not allowed");
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
  }

  std::size_t vertex_count() const noexcept { return n_; }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u * n_ + v] != 0;
  }

  std::size_t edge_count() const noexcept {
    std::size_t count = 0;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v) count += adj_[u * n_ + v];
    return count;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (adj_[u * n_ + v]) out.emplace_back(u, v);
    return out;
  }

  /// FNV-1a over the vertex count and the upper triangle. Stable across
  /// platforms; used to tag synthesized circuits with their source graph.
  std::uint64_t hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t byte) {
      h ^= byte;
      h *= 0x100000001b3ULL;
    };
    for (int shift = 0; shift < 64; shift += 8) mix((static_cast<std::uint64_t>(n_) >> shift) & 0xff);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v) mix(adj_[u * n_ + v]);
    return h;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (v >= n_)
      throw RangeError("vertex " + std::to_string(v) + " out of range for graph with " + std::to_string(n_) +
                       " vertices");
  }

  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

/// Strictly ascending set of vertex indices.
class VertexCombination {
 public:
  VertexCombination() = default;

  /// Throws ArgumentError unless `vertices` is strictly increasing.
  explicit VertexCombination(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    for (std::size_t i = 1; i < vertices_.size(); ++i)
      if (vertices_[i - 1] >= vertices_[i])
        throw ArgumentError("vertex combination must be strictly ascending");
  }

  VertexCombination(std::initializer_list<Vertex> vertices) : VertexCombination(std::vector<Vertex>(vertices)) {}

  std::size_t size() const noexcept { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  friend bool operator==(const VertexCombination&, const VertexCombination&) = default;
  friend auto operator<=>(const VertexCombination&, const VertexCombination&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct CliqueWitness {
  VertexCombination combination;

  std::size_t size() const noexcept { return combination.size(); }

  friend bool operator==(const CliqueWitness&, const CliqueWitness&) = default;
};

// ---------------------------------------------------------------------------
// Combinatorics and the classical oracle

/// Binomial coefficient; exact for the small arguments used here.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

/// Width of one vertex slot: ceil(log2 n), but at least 1.
constexpr std::size_t bits_per_vertex(std::size_t n) noexcept {
  if (n <= 2) return 1;
  return static_cast<std::size_t>(std::bit_width(n - 1));
}

/// All k-subsets of {0..n-1} in lexicographic order. Empty when k > n.
inline std::vector<VertexCombination> combinations(std::size_t n, std::size_t k) {
  if (k == 0) throw ArgumentError("clique size k must be at least 1");
  std::vector<VertexCombination> out;
  if (k > n) return out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  std::vector<Vertex> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = static_cast<Vertex>(i);
  while (true) {
    out.emplace_back(current);
    // Rightmost slot that can still advance.
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

inline bool is_clique(const Graph& g, const VertexCombination& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.adjacent(c[i], c[j])) return false;
  return true;
}

/// Every k-clique of `g` in lexicographic order.
inline std::vector<CliqueWitness> enumerate_cliques(const Graph& g, std::size_t k) {
  std::vector<CliqueWitness> out;
  for (auto& c : combinations(g.vertex_count(), k))
    if (is_clique(g, c)) out.push_back(CliqueWitness{std::move(c)});
  return out;
}

/// A maximum clique; ties go to the lexicographically smallest tuple.
inline CliqueWitness max_clique_classical(const Graph& g) {
  for (std::size_t k = g.vertex_count(); k >= 2; --k) {
    auto cliques = enumerate_cliques(g, k);
    if (!cliques.empty()) return cliques.front();
  }
  return CliqueWitness{VertexCombination{0}};
}

/// Concatenated big-endian `bits`-wide encodings of the vertices, in
/// ascending vertex order. Character i of the result is input qubit i.
inline std::string encode_combination(const VertexCombination& c, std::size_t bits) {
  std::string out;
  out.reserve(c.size() * bits);
  for (Vertex v : c) {
    if (bits < 32 && (v >> bits) != 0)
      throw RangeError("vertex " + std::to_string(v) + " does not fit in " + std::to_string(bits) + " bits");
    for (std::size_t b = bits; b-- > 0;) out.push_back(((v >> b) & 1U) ? '1' : '0');
  }
  return out;
}

/// Inverse of encode_combination. Returns nullopt for strings that do not
/// encode a valid combination (a vertex >= n, or slots not strictly ascending).
inline std::optional<VertexCombination> decode_combination(std::string_view bitstring, std::size_t k,
                                                           std::size_t bits, std::size_t n) {
  if (bitstring.size() != k * bits) return std::nullopt;
  std::vector<Vertex> vertices;
  vertices.reserve(k);
  for (std::size_t slot = 0; slot < k; ++slot) {
    Vertex v = 0;
    for (std::size_t b = 0; b < bits; ++b) {
      char ch = bitstring[slot * bits + b];
      if (ch != '0' && ch != '1') return std::nullopt;
      v = (v << 1) | static_cast<Vertex>(ch == '1');
    }
    if (v >= n) return std::nullopt;
    if (!vertices.empty() && vertices.back() >= v) return std::nullopt;
    vertices.push_back(v);
  }
  return VertexCombination(std::move(vertices));
}

// ---------------------------------------------------------------------------
// Text formats

enum class GraphFormat { EdgeList, AdjacencyMatrix, Dimacs };

inline std::string_view to_string(GraphFormat f) noexcept {
  switch (f) {
    case GraphFormat::EdgeList: return "edge-list";
    case GraphFormat::AdjacencyMatrix: return "adjacency-matrix";
    case GraphFormat::Dimacs: return "dimacs";
  }
  return "?";
}

inline std::optional<GraphFormat> graph_format_from_name(std::string_view name) {
  if (name == "edge-list" || name == "edges") return GraphFormat::EdgeList;
  if (name == "adjacency-matrix" || name == "adjacency" || name == "matrix") return GraphFormat::AdjacencyMatrix;
  if (name == "dimacs") return GraphFormat::Dimacs;
  return std::nullopt;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\f\v";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

inline void add_parsed_edge(Graph& g, std::uint64_t u, std::uint64_t v, std::size_t line) {
  auto n = g.vertex_count();
  if (u >= n || v >= n)
    throw RangeError("line " + std::to_string(line) + ": vertex " + std::to_string(std::max(u, v)) +
                     " out of range for graph with " + std::to_string(n) + " vertices");
  if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u) + " is not allowed", line);
  g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

inline bool is_comment(std::string_view line) { return !line.empty() && line.front() == '#'; }

inline Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  std::optional<Graph> g;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view line = trim(lines[ln]);
    std::size_t line_no = ln + 1;
    if (line.empty() || is_comment(line)) continue;
    if (!g) {
      auto semi = line.find(';');
      if (semi == std::string_view::npos) throw ParseError("expected vertex count header \"n;\"", line_no);
      auto count = parse_uint(trim(line.substr(0, semi)));
      if (!count || *count == 0) throw ParseError("vertex count must be a positive integer", line_no);
      g.emplace(static_cast<std::size_t>(*count));
      line = trim(line.substr(semi + 1));
    }
    std::size_t pos = 0;
    while (pos <= line.size()) {
      auto comma = line.find(',', pos);
      auto token = trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      if (!token.empty()) {
        auto dash = token.find('-');
        if (dash == std::string_view::npos)
          throw ParseError("expected edge \"u-v\", got \"" + std::string(token) + "\"", line_no);
        auto u = parse_uint(trim(token.substr(0, dash)));
        auto v = parse_uint(trim(token.substr(dash + 1)));
        if (!u || !v) throw ParseError("expected edge \"u-v\", got \"" + std::string(token) + "\"", line_no);
        add_parsed_edge(*g, *u, *v, line_no);
      } else if (comma != std::string_view::npos) {
        throw ParseError("empty edge entry", line_no);
      }
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  if (!g) throw ParseError("missing vertex count header \"n;\"", lines.size() + 1);
  return std::move(*g);
}

inline Graph parse_adjacency_matrix(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> rows;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto line = trim(lines[ln]);
    if (line.empty() || is_comment(line)) continue;
    rows.emplace_back(ln + 1, split_ws(line));
  }
  if (rows.empty()) throw ParseError("empty adjacency matrix", 1);
  std::size_t n = rows.front().second.size();
  Graph g(n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& [line_no, cells] = rows[r];
    if (r >= n) throw ParseError("matrix has more than " + std::to_string(n) + " rows", line_no);
    if (cells.size() != n)
      throw ParseError("expected " + std::to_string(n) + " entries, got " + std::to_string(cells.size()), line_no);
    for (std::size_t c = 0; c < n; ++c) {
      if (cells[c] != "0" && cells[c] != "1")
        throw ParseError("matrix entries must be 0 or 1, got \"" + std::string(cells[c]) + "\"", line_no);
      if (cells[c] == "1") add_parsed_edge(g, r, c, line_no);
    }
  }
  if (rows.size() != n)
    throw ParseError("expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()),
                     rows.back().first);
  return g;
}

inline Graph parse_dimacs(std::string_view text) {
  auto lines = split_lines(text);
  std::optional<Graph> g;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto line = trim(lines[ln]);
    std::size_t line_no = ln + 1;
    if (line.empty() || line.front() == 'c') continue;
    auto fields = split_ws(line);
    if (fields[0] == "p") {
      if (g) throw ParseError("duplicate problem line", line_no);
      if (fields.size() != 4) throw ParseError("expected \"p edge <n> <m>\"", line_no);
      auto n = parse_uint(fields[2]);
      if (!n || *n == 0 || !parse_uint(fields[3])) throw ParseError("invalid problem line counts", line_no);
      g.emplace(static_cast<std::size_t>(*n));
    } else if (fields[0] == "e") {
      if (!g) throw ParseError("edge line before problem line", line_no);
      if (fields.size() != 3) throw ParseError("expected \"e <u> <v>\"", line_no);
      auto u = parse_uint(fields[1]);
      auto v = parse_uint(fields[2]);
      if (!u || !v) throw ParseError("edge endpoints must be integers", line_no);
      if (*u == 0 || *v == 0) throw RangeError("line " + std::to_string(line_no) + ": DIMACS vertices are 1-based");
      add_parsed_edge(*g, *u - 1, *v - 1, line_no);
    } else {
      throw ParseError("unrecognized line \"" + std::string(line) + "\"", line_no);
    }
  }
  if (!g) throw ParseError("missing problem line \"p edge <n> <m>\"", lines.size() + 1);
  return std::move(*g);
}

}  // namespace detail

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList: return detail::parse_edge_list(text);
    case GraphFormat::AdjacencyMatrix: return detail::parse_adjacency_matrix(text);
    case GraphFormat::Dimacs: return detail::parse_dimacs(text);
  }
  throw ArgumentError("unknown graph format");
}

inline std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  auto edges = g.edges();
  switch (format) {
    case GraphFormat::EdgeList:
      out << g.vertex_count() << ";\n";
      for (std::size_t i = 0; i < edges.size(); ++i)
        out << (i ? "," : "") << edges[i].first << '-' << edges[i].second;
      if (!edges.empty()) out << '\n';
      break;
    case GraphFormat::AdjacencyMatrix:
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) out << (v ? " " : "") << (g.adjacent(u, v) ? 1 : 0);
        out << '\n';
      }
      break;
    case GraphFormat::Dimacs:
      out << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
      for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
      break;
  }
  return out.str();
}

/// Picks a format from the file extension, falling back to sniffing the
/// first meaningful line.
inline GraphFormat detect_graph_format(const std::filesystem::path& path, std::string_view text) {
  auto ext = path.extension().string();
  if (ext == ".el" || ext == ".edges") return GraphFormat::EdgeList;
  if (ext == ".adj" || ext == ".mat") return GraphFormat::AdjacencyMatrix;
  if (ext == ".col" || ext == ".clq" || ext == ".dimacs") return GraphFormat::Dimacs;
  for (auto raw : detail::split_lines(text)) {
    auto line = detail::trim(raw);
    if (line.empty() || detail::is_comment(line)) continue;
    if (line.front() == 'c' || line.front() == 'p') return GraphFormat::Dimacs;
    if (line.find(';') != std::string_view::npos) return GraphFormat::EdgeList;
    return GraphFormat::AdjacencyMatrix;
  }
  return GraphFormat::EdgeList;
}

}  // namespace qclique
