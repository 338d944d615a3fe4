#pragma once

#include <gengraph/error.hpp>
#include <gengraph/graph.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace gengraph {

/// Per-vertex clockwise order of neighbours.
struct RotationEmbedding {
  std::vector<std::vector<std::size_t>> rotation;
};

enum class KuratowskiKind { K5, K33 };

constexpr std::string_view to_string(KuratowskiKind k) { return k == KuratowskiKind::K5 ? "K5" : "K33"; }

/// An edge subset of the input graph forming a subdivision of K5 or K3,3.
struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::K5;
  std::vector<Edge> edges;
  std::vector<std::size_t> branch_vertices;
};

struct PlanarityVerdict {
  bool planar = false;
  std::optional<RotationEmbedding> embedding;
  std::optional<KuratowskiWitness> witness;
};

/// False when the edge count alone rules out planarity (m > 3n - 6, n >= 3).
constexpr bool euler_bound(std::size_t vertices, std::size_t edges) {
  return vertices < 3 || edges <= 3 * vertices - 6;
}

namespace detail {

/// Left-right planarity test (DFS orientation, then constraint
/// propagation over a stack of conflict pairs), with embedding recovery.
class LeftRightPlanarity {
 public:
  explicit LeftRightPlanarity(const SimpleGraph& g)
      : n_(g.vertex_count()),
        adj_(n_),
        height_(n_, -1),
        parent_edge_(n_, -1),
        out_edges_(n_),
        left_ref_(n_, -1),
        right_ref_(n_, -1),
        links_(n_),
        first_nbr_(n_, -1) {
    for (auto [u, v] : g.edges()) {
      const int id = static_cast<int>(src_.size());
      src_.push_back(-1);
      dst_.push_back(-1);
      adj_[u].emplace_back(static_cast<int>(v), id);
      adj_[v].emplace_back(static_cast<int>(u), id);
    }
    const std::size_t m = src_.size();
    lowpt_.assign(m, 0);
    lowpt2_.assign(m, 0);
    nesting_depth_.assign(m, 0);
    ref_.assign(m, -1);
    side_.assign(m, 1);
    lowpt_edge_.assign(m, -1);
    stack_bottom_.assign(m, 0);
  }

  bool run(bool embed) {
    const std::size_t m = src_.size();
    if (!euler_bound(n_, m)) return false;
    for (std::size_t v = 0; v < n_; ++v)
      if (height_[v] == -1) {
        height_[v] = 0;
        roots_.push_back(static_cast<int>(v));
        orient(static_cast<int>(v));
      }
    sort_by_nesting_depth();
    for (int root : roots_)
      if (!test(root)) return false;
    if (!embed) return true;

    for (std::size_t e = 0; e < m; ++e) nesting_depth_[e] *= sign(static_cast<int>(e));
    sort_by_nesting_depth();
    for (std::size_t v = 0; v < n_; ++v) {
      int previous = -1;
      for (int e : out_edges_[v]) {
        add_half_edge_cw(static_cast<int>(v), dst_[e], previous);
        previous = dst_[e];
      }
    }
    for (int root : roots_) embed_from(root);
    return true;
  }

  RotationEmbedding embedding() const {
    RotationEmbedding emb;
    emb.rotation.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      if (first_nbr_[v] == -1) continue;
      int w = first_nbr_[v];
      do {
        emb.rotation[v].push_back(static_cast<std::size_t>(w));
        w = links_[v].at(w).cw;
      } while (w != first_nbr_[v]);
    }
    return emb;
  }

 private:
  struct Interval {
    int low = -1;
    int high = -1;
    bool empty() const { return low == -1 && high == -1; }
  };
  struct ConflictPair {
    Interval left;
    Interval right;
    void swap() { std::swap(left, right); }
  };
  struct Links {
    int cw = -1;
    int ccw = -1;
  };

  bool conflicting(const Interval& i, int edge) const {
    return !i.empty() && i.high != -1 && lowpt_[i.high] > lowpt_[edge];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return p.right.low == -1 ? std::numeric_limits<int>::max() : lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  void orient(int v) {
    const int e = parent_edge_[v];
    for (auto [w, id] : adj_[v]) {
      if (src_[id] != -1) continue;
      src_[id] = v;
      dst_[id] = w;
      out_edges_[v].push_back(id);
      lowpt_[id] = height_[v];
      lowpt2_[id] = height_[v];
      if (height_[w] == -1) {
        parent_edge_[w] = id;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[id] = height_[w];
      }
      nesting_depth_[id] = 2 * lowpt_[id];
      if (lowpt2_[id] < height_[v]) nesting_depth_[id] += 1;  // chordal
      if (e != -1) {
        if (lowpt_[id] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[id]);
          lowpt_[e] = lowpt_[id];
        } else if (lowpt_[id] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[id]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[id]);
        }
      }
    }
  }

  void sort_by_nesting_depth() {
    for (auto& edges : out_edges_)
      std::stable_sort(edges.begin(), edges.end(),
                       [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
  }

  bool test(int v) {
    const int e = parent_edge_[v];
    const auto& edges = out_edges_[v];
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const int ei = edges[i];
      const int w = dst_[ei];
      stack_bottom_[ei] = stack_.size();
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[ei] < height_[v]) {
        if (i == 0) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != -1) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty())
          p.right = q.right;
        else
          ref_[p.right.low] = q.right.high;
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (stack_.size() != stack_bottom_[ei]);

    while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      if (p.right.low != -1) ref_[p.right.low] = q.right.high;
      if (q.right.low != -1) p.right.low = q.right.low;
      if (p.left.empty())
        p.left = q.left;
      else
        ref_[p.left.low] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = src_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
      const ConflictPair p = stack_.back();
      stack_.pop_back();
      if (p.left.low != -1) side_[p.left.low] = -1;
    }
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != -1 && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == -1 && p.left.low != -1) {
        ref_[p.left.low] = p.right.low;
        side_[p.left.low] = -1;
        p.left.low = -1;
      }
      while (p.right.high != -1 && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
      if (p.right.high == -1 && p.right.low != -1) {
        ref_[p.right.low] = p.left.low;
        side_[p.right.low] = -1;
        p.right.low = -1;
      }
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u]) {  // e has a return edge
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      ref_[e] = (hl != -1 && (hr == -1 || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
    }
  }

  int sign(int e) {
    std::vector<int> chain;
    for (int x = e; ref_[x] != -1; x = ref_[x]) chain.push_back(x);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      side_[*it] *= side_[ref_[*it]];
      ref_[*it] = -1;
    }
    return side_[e];
  }

  void add_half_edge_cw(int start, int end, int reference) {
    auto& l = links_[start];
    if (reference == -1) {
      l[end] = Links{end, end};
      first_nbr_[start] = end;
      return;
    }
    const int cw_reference = l.at(reference).cw;
    l[reference].cw = end;
    l[end] = Links{cw_reference, reference};
    l[cw_reference].ccw = end;
  }

  void add_half_edge_ccw(int start, int end, int reference) {
    if (reference == -1) {
      add_half_edge_cw(start, end, -1);
      return;
    }
    const int ccw_reference = links_[start].at(reference).ccw;
    add_half_edge_cw(start, end, ccw_reference);
    if (reference == first_nbr_[start]) first_nbr_[start] = end;
  }

  void add_half_edge_first(int start, int end) { add_half_edge_ccw(start, end, first_nbr_[start]); }

  void embed_from(int v) {
    for (int ei : out_edges_[v]) {
      const int w = dst_[ei];
      if (ei == parent_edge_[w]) {
        add_half_edge_first(w, v);
        left_ref_[v] = w;
        right_ref_[v] = w;
        embed_from(w);
      } else if (side_[ei] == 1) {
        add_half_edge_cw(w, v, right_ref_[w]);
      } else {
        add_half_edge_ccw(w, v, left_ref_[w]);
        left_ref_[w] = v;
      }
    }
  }

  std::size_t n_;
  std::vector<std::vector<std::pair<int, int>>> adj_;  // (neighbour, edge id)
  std::vector<int> src_, dst_;                          // orientation per edge
  std::vector<int> height_;
  std::vector<int> parent_edge_;
  std::vector<std::vector<int>> out_edges_;
  std::vector<int> roots_;
  std::vector<int> lowpt_, lowpt2_, nesting_depth_;
  std::vector<int> ref_, side_, lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<ConflictPair> stack_;
  std::vector<int> left_ref_, right_ref_;
  std::vector<std::map<int, Links>> links_;
  std::vector<int> first_nbr_;
};

}  // namespace detail

/// Verdict only, no certificate.
inline bool is_planar_graph(const SimpleGraph& g) {
  return detail::LeftRightPlanarity(g).run(false);
}

/// Number of faces traced by the rotation (next dart after (u, v) is
/// (v, successor of u around v)). Isolated vertices contribute no faces.
inline std::size_t faces_from_rotation(const RotationEmbedding& emb, const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (emb.rotation.size() != n) throw Error(ErrorCode::MalformedRotation, "rotation has the wrong vertex count");
  std::vector<std::map<std::size_t, std::size_t>> position(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& rot = emb.rotation[v];
    if (rot.size() != g.degree(v))
      throw Error(ErrorCode::MalformedRotation, "rotation at vertex " + std::to_string(v) + " has the wrong size");
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (rot[i] >= n || !g.has_edge(v, rot[i]) || !position[v].emplace(rot[i], i).second)
        throw Error(ErrorCode::MalformedRotation, "rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
    }
  }
  std::map<Edge, bool> used;
  std::size_t faces = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : emb.rotation[u]) {
      if (used[{u, v}]) continue;
      ++faces;
      Edge dart{u, v};
      while (!used[dart]) {
        used[dart] = true;
        const auto [a, b] = dart;
        const auto& rot = emb.rotation[b];
        const std::size_t next = rot[(position[b].at(a) + 1) % rot.size()];
        dart = {b, next};
      }
    }
  return faces;
}

inline std::size_t count_components_with_edges(const SimpleGraph& g) {
  std::vector<char> seen(g.vertex_count());
  std::size_t components = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (seen[s] || g.degree(s) == 0) continue;
    ++components;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for_each_member(g.neighbors(v), [&](std::size_t w) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      });
    }
  }
  return components;
}

/// Euler check summed over components that have edges: V' - E + F = 2C'.
inline bool is_valid_planar_embedding(const RotationEmbedding& emb, const SimpleGraph& g) {
  std::size_t active = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) ++active;
  const auto faces = faces_from_rotation(emb, g);
  const auto components = count_components_with_edges(g);
  return static_cast<long>(active) - static_cast<long>(g.edge_count()) + static_cast<long>(faces) ==
         2 * static_cast<long>(components);
}

/// Classifies an edge set as a subdivision of K5 or K3,3: after suppressing
/// degree-2 vertices the branch vertices must form exactly K5 or K3,3 and
/// every edge must lie on one of the suppressed paths.
inline std::optional<KuratowskiWitness> classify_kuratowski(std::size_t vertex_count, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> adj(vertex_count);
  std::map<Edge, bool> seen_edges;
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count || u == v) return std::nullopt;
    if (!seen_edges.emplace(std::minmax(u, v), true).second) return std::nullopt;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    const auto d = adj[v].size();
    if (d == 0 || d == 2) continue;
    branch.push_back(v);
  }
  KuratowskiWitness w;
  if (branch.size() == 5 &&
      std::all_of(branch.begin(), branch.end(), [&](std::size_t v) { return adj[v].size() == 4; })) {
    w.kind = KuratowskiKind::K5;
  } else if (branch.size() == 6 &&
             std::all_of(branch.begin(), branch.end(), [&](std::size_t v) { return adj[v].size() == 3; })) {
    w.kind = KuratowskiKind::K33;
  } else {
    return std::nullopt;
  }
  std::vector<char> is_branch(vertex_count);
  for (auto b : branch) is_branch[b] = 1;

  std::map<Edge, int> branch_pairs;
  std::size_t path_edges = 0;
  for (auto b : branch)
    for (auto start : adj[b]) {
      std::size_t prev = b, cur = start, length = 1;
      while (!is_branch[cur]) {
        const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++length;
      }
      if (cur == b) return std::nullopt;
      if (b < cur) {
        if (++branch_pairs[{b, cur}] > 1) return std::nullopt;
        path_edges += length;
      }
    }
  if (path_edges != edges.size()) return std::nullopt;

  if (w.kind == KuratowskiKind::K5) {
    if (branch_pairs.size() != 10) return std::nullopt;
  } else {
    if (branch_pairs.size() != 9) return std::nullopt;
    std::map<std::size_t, int> colour;
    colour[branch[0]] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [pair, count] : branch_pairs) {
        auto [a, b] = pair;
        if (colour.count(a) && !colour.count(b)) { colour[b] = 1 - colour[a]; changed = true; }
        if (colour.count(b) && !colour.count(a)) { colour[a] = 1 - colour[b]; changed = true; }
        if (colour.count(a) && colour.count(b) && colour[a] == colour[b]) return std::nullopt;
      }
    }
    if (colour.size() != 6) return std::nullopt;
    int side0 = 0;
    for (const auto& [v, c] : colour) side0 += c == 0;
    if (side0 != 3) return std::nullopt;
  }
  w.edges = edges;
  std::sort(w.edges.begin(), w.edges.end());
  w.branch_vertices = branch;
  return w;
}

inline bool is_kuratowski_subdivision(const SimpleGraph& g, const KuratowskiWitness& w) {
  for (auto [u, v] : w.edges)
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v)) return false;
  const auto c = classify_kuratowski(g.vertex_count(), w.edges);
  return c && c->kind == w.kind && c->branch_vertices == w.branch_vertices;
}

/// Deletes edges in lexicographic order whenever the rest stays
/// non-planar. The minimal non-planar remainder is a Kuratowski subdivision.
inline KuratowskiWitness kuratowski_witness(const SimpleGraph& g) {
  if (is_planar_graph(g)) throw Error(ErrorCode::InputPlanar, "graph is planar; no Kuratowski witness exists");
  SimpleGraph h = g;
  for (auto [u, v] : g.edges()) {
    h.remove_edge(u, v);
    if (is_planar_graph(h)) h.add_edge(u, v);
  }
  auto w = classify_kuratowski(h.vertex_count(), h.edges());
  if (!w) throw Error(ErrorCode::InvariantViolated, "edge-minimal non-planar subgraph is not a Kuratowski subdivision");
  return *w;
}

inline PlanarityVerdict is_planar(const SimpleGraph& g) {
  detail::LeftRightPlanarity lr(g);
  PlanarityVerdict verdict;
  verdict.planar = lr.run(true);
  if (verdict.planar)
    verdict.embedding = lr.embedding();
  else
    verdict.witness = kuratowski_witness(g);
  return verdict;
}

}  // namespace gengraph
