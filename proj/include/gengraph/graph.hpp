#pragma once

#include <gengraph/element_set.hpp>
#include <gengraph/error.hpp>
#include <gengraph/group.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gengraph {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph over vertices 0..n-1 with bitmask adjacency.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertex_count, std::vector<std::string> labels = {})
      : adjacency_(vertex_count, ElementSet(vertex_count)), labels_(std::move(labels)) {
    if (labels_.empty()) {
      labels_.resize(vertex_count);
      for (std::size_t v = 0; v < vertex_count; ++v) labels_[v] = std::to_string(v);
    } else if (labels_.size() != vertex_count) {
      throw Error(ErrorCode::BadParameter, "label count does not match vertex count");
    }
  }

  static SimpleGraph from_edges(std::size_t vertex_count, const std::vector<Edge>& edges) {
    SimpleGraph g(vertex_count);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_edge(std::size_t u, std::size_t v) const { return adjacency_.at(u).test(v); }

  void add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(ErrorCode::BadVertex, "self-loops are not allowed");
    if (adjacency_[u].test(v)) return;
    adjacency_[u].set(v);
    adjacency_[v].set(u);
    ++edge_count_;
  }

  void remove_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (!adjacency_[u].test(v)) return;
    adjacency_[u].reset(v);
    adjacency_[v].reset(u);
    --edge_count_;
  }

  const ElementSet& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).count(); }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
      for (auto v = adjacency_[u].find_next(u); v != ElementSet::npos; v = adjacency_[u].find_next(v))
        out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(std::size_t v) const {
    if (v >= adjacency_.size())
      throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " out of range");
  }

  std::vector<ElementSet> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Γ(G): vertex v stands for element v + 1; x ~ y iff x != y and <x, y> = G.
inline SimpleGraph generating_graph(const FiniteGroup& g) {
  if (g.order() < 2) throw Error(ErrorCode::TrivialGroup, "generating graph needs |G| >= 2");
  const std::size_t n = g.order() - 1;
  std::vector<std::string> labels(g.element_names().begin() + 1, g.element_names().end());
  SimpleGraph graph(n, std::move(labels));
  for (Element x = 1; x < g.order(); ++x)
    for (Element y = x + 1; y < g.order(); ++y)
      if (generates(g, x, y)) graph.add_edge(x - 1, y - 1);
  return graph;
}

inline Element element_of_vertex(std::size_t v) { return static_cast<Element>(v + 1); }
inline std::size_t vertex_of_element(Element x) { return static_cast<std::size_t>(x) - 1; }

/// A subgraph plus the map from its vertices back to the source graph.
struct InducedGraph {
  SimpleGraph graph;
  std::vector<std::size_t> kept;  // new vertex -> source vertex
};

inline InducedGraph induced_subgraph(const SimpleGraph& g, const std::vector<std::size_t>& vertices) {
  std::vector<std::size_t> position(g.vertex_count(), g.vertex_count());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto v = vertices[i];
    if (v >= g.vertex_count()) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " out of range");
    if (position[v] != g.vertex_count()) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " repeated");
    position[v] = i;
    labels.push_back(g.label(v));
  }
  SimpleGraph sub(vertices.size(), std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for_each_member(g.neighbors(vertices[i]), [&](std::size_t w) {
      if (position[w] != g.vertex_count() && i < position[w]) sub.add_edge(i, position[w]);
    });
  return {std::move(sub), vertices};
}

/// Δ: Γ with isolated vertices removed.
inline InducedGraph pruned_graph(const SimpleGraph& g) {
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  return induced_subgraph(g, keep);
}

inline SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b) {
  SimpleGraph g(a + b);
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}
}  // namespace detail

inline std::string to_dot(const SimpleGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph \"" << detail::dot_escape(name) << "\" {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    os << "  " << v << " [label=\"" << detail::dot_escape(g.label(v)) << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

/// "p edges <n> <m>" followed by one "u v" line per edge.
inline std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  os << "p edges " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

/// Inverse of to_edge_list.
inline SimpleGraph from_edge_list(const std::string& text) {
  std::istringstream is(text);
  std::string p, kind;
  std::size_t n = 0, m = 0;
  if (!(is >> p >> kind >> n >> m) || p != "p" || kind != "edges")
    throw Error(ErrorCode::SyntaxError, "expected header 'p edges <n> <m>'");
  SimpleGraph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t u = 0, v = 0;
    if (!(is >> u >> v)) throw Error(ErrorCode::SyntaxError, "expected " + std::to_string(m) + " edges");
    g.add_edge(u, v);
  }
  return g;
}

/// For cyclic G of order >= 7: four generators plus one further
/// non-identity element, whose induced subgraph in Γ(G) is K_5.
/// Returned as element indices.
inline std::optional<std::vector<Element>> cyclic_k5_vertices(const FiniteGroup& g) {
  if (!g.is_cyclic() || g.order() < 2) return std::nullopt;
  std::vector<Element> picked;
  for (Element x = 1; x < g.order() && picked.size() < 4; ++x)
    if (g.element_order(x) == g.order()) picked.push_back(x);
  if (picked.size() < 4) return std::nullopt;
  for (Element x = 1; x < g.order(); ++x)
    if (std::find(picked.begin(), picked.end(), x) == picked.end()) {
      picked.push_back(x);
      return picked;
    }
  return std::nullopt;
}

}  // namespace gengraph
