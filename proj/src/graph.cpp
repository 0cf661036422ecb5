#include "coalition/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace coalition {

Graph::Graph(int order) : order_(order) {
  if (order < 1 || order > kMaxOrder) {
    throw GraphError("graph order must lie in 1.." + std::to_string(kMaxOrder) + ", got " +
                     std::to_string(order));
  }
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) {
    throw GraphError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(order_ - 1));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += rows_[v].size();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  rows_[u].insert(v);
  rows_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u].erase(v);
  rows_[v].erase(u);
}

bool Graph::operator==(const Graph& other) const {
  if (order_ != other.order_) return false;
  return std::equal(rows_.begin(), rows_.begin() + order_, other.rows_.begin());
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.min_degree = g.order();
  s.max_degree = 0;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
    if (d == g.order() - 1) s.full_vertices.insert(v);
  }
  return s;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw GraphError("relabel: permutation size does not match graph order");
  }
  VertexSet seen;
  for (int image : perm) {
    if (image < 0 || image >= g.order() || seen.contains(image)) {
      throw GraphError("relabel: not a permutation");
    }
    seen.insert(image);
  }
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (u < v) out.add_edge(perm[u], perm[v]);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  std::array<int, kMaxOrder> index{};
  int next = 0;
  for (int v : keep) index[v] = next++;
  Graph out(next);
  for (int u : keep) {
    for (int v : g.neighbors(u) & keep) {
      if (u < v) out.add_edge(index[u], index[v]);
    }
  }
  return out;
}

Graph remove_vertex(const Graph& g, int v) {
  VertexSet keep = g.vertices();
  keep.erase(v);
  return induced_subgraph(g, keep);
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u) {
    for (int v : a.neighbors(u)) {
      if (u < v) out.add_edge(u, v);
    }
  }
  const int shift = a.order();
  for (int u = 0; u < b.order(); ++u) {
    for (int v : b.neighbors(u)) {
      if (u < v) out.add_edge(u + shift, v + shift);
    }
  }
  return out;
}

Graph join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u) {
    for (int v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("C(n) requires n >= 3, got " + std::to_string(n));
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph corona_k3_k1() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

namespace {

// Recursive-descent parser for the named-graph grammar.
class NamedParser {
 public:
  explicit NamedParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw GraphError("named graph '" + std::string(text_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a graph name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("non-positive order");
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  int order_argument() {
    expect('(');
    const int n = integer();
    expect(')');
    if (n < 1) fail("non-positive order");
    return n;
  }

  Graph expr() {
    const std::string name = identifier();
    if (name == "K") return complete_graph(order_argument());
    if (name == "Kbar") return empty_graph(order_argument());
    if (name == "P") return path_graph(order_argument());
    if (name == "C") {
      const int n = order_argument();
      if (n < 3) fail("C(n) requires n >= 3");
      return cycle_graph(n);
    }
    if (name == "Kbip") {
      expect('(');
      const int a = integer();
      expect(',');
      const int b = integer();
      expect(')');
      if (a < 1 || b < 1) fail("non-positive order");
      return complete_bipartite(a, b);
    }
    if (name == "union" || name == "join") {
      expect('(');
      Graph left = expr();
      expect(',');
      Graph right = expr();
      expect(')');
      if (left.order() + right.order() > kMaxOrder) fail("combined order exceeds 32");
      return name == "union" ? disjoint_union(left, right) : join(left, right);
    }
    if (name == "corona_k3_k1") return corona_k3_k1();
    fail("unknown graph name '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

constexpr int kGraph6Offset = 63;

}  // namespace

Graph build_named(std::string_view expr) { return NamedParser(expr).parse(); }

Graph parse_graph6(std::string_view text) {
  using Kind = Graph6Error::Kind;
  if (text.empty()) throw Graph6Error(Kind::kEmpty, "graph6: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw Graph6Error(Kind::kByteOutOfRange,
                        "graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                            " outside 63..126");
    }
  }
  const int order = static_cast<unsigned char>(text[0]) - kGraph6Offset;
  if (order < 1 || order > kMaxOrder) {
    throw Graph6Error(Kind::kOrderOutOfRange,
                      "graph6: order must lie in 1.." + std::to_string(kMaxOrder));
  }
  const int bit_count = order * (order - 1) / 2;
  const std::size_t byte_count = static_cast<std::size_t>((bit_count + 5) / 6);
  if (text.size() < 1 + byte_count) {
    throw Graph6Error(Kind::kTruncated, "graph6: expected " + std::to_string(byte_count) +
                                            " data bytes, got " + std::to_string(text.size() - 1));
  }
  if (text.size() > 1 + byte_count) {
    throw Graph6Error(Kind::kTrailingData, "graph6: " + std::to_string(text.size() - 1 - byte_count) +
                                               " trailing bytes after the edge data");
  }

  Graph g(order);
  int k = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kGraph6Offset;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  for (; k < static_cast<int>(byte_count) * 6; ++k) {
    const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kGraph6Offset;
    if ((byte >> (5 - k % 6)) & 1) {
      throw Graph6Error(Kind::kPaddingBits, "graph6: nonzero padding bits in final byte");
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int order = g.order();
  const int bit_count = order * (order - 1) / 2;
  std::string out(1 + static_cast<std::size_t>((bit_count + 5) / 6), '\0');
  out[0] = static_cast<char>(order + kGraph6Offset);
  std::vector<int> bytes((bit_count + 5) / 6, 0);
  int k = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if (g.adjacent(u, v)) bytes[k / 6] |= 1 << (5 - k % 6);
    }
  }
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    out[1 + i] = static_cast<char>(bytes[i] + kGraph6Offset);
  }
  return out;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " {";
  bool first = true;
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (u < v) {
        os << (first ? "" : ",") << u << '-' << v;
        first = false;
      }
    }
  }
  os << '}';
  return os.str();
}

}  // namespace coalition
