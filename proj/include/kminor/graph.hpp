#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kminor/error.hpp"

namespace kminor {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids. Every set-valued result in the
/// library is normalized to this form.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

/// Simple undirected graph on vertices 0..vertex_count()-1 with sorted
/// adjacency lists. Removing a vertex compacts the ids above it.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : adj_(vertex_count) {}

  Graph(std::size_t vertex_count, std::span<const Edge> edges) : adj_(vertex_count) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adj_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    return adj_[v];
  }

  std::size_t degree(Vertex v) const {
    check(v);
    return adj_[v].size();
  }

  bool has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Returns false when the edge already exists.
  bool add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) fail(ErrorKind::invalid_argument, "self-loop on vertex " + std::to_string(u));
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
  }

  /// Returns false when the edge was absent.
  bool remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it == nu.end() || *it != v) return false;
    nu.erase(it);
    auto& nv = adj_[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
    return true;
  }

  /// Deletes v with its incident edges; ids above v shift down by one.
  void remove_vertex(Vertex v) {
    check(v);
    for (Vertex w : adj_[v]) {
      auto& nw = adj_[w];
      nw.erase(std::lower_bound(nw.begin(), nw.end(), v));
    }
    edge_count_ -= adj_[v].size();
    adj_.erase(adj_.begin() + v);
    for (auto& list : adj_) {
      for (Vertex& w : list) {
        if (w > v) --w;
      }
    }
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check(Vertex v) const {
    if (v >= adj_.size()) {
      fail(ErrorKind::invalid_argument, "vertex id " + std::to_string(v) + " out of range (n=" +
                                            std::to_string(adj_.size()) + ")");
    }
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Maps every live vertex of a minor to the set of original vertices it
/// stands for. Kept in lockstep with the minor's id compaction.
struct ContractionTrace {
  std::vector<VertexSet> preimage;
  std::size_t original_vertex_count = 0;

  static ContractionTrace identity(std::size_t n) {
    ContractionTrace t;
    t.original_vertex_count = n;
    t.preimage.resize(n);
    for (Vertex v = 0; v < n; ++v) t.preimage[v] = {v};
    return t;
  }

  std::size_t live_count() const noexcept { return preimage.size(); }

  /// Union of the preimages of a set of live vertices.
  VertexSet expand(const VertexSet& minor_vertices) const {
    VertexSet out;
    for (Vertex v : minor_vertices) {
      if (v >= preimage.size()) fail(ErrorKind::internal, "trace lookup out of range");
      out.insert(out.end(), preimage[v].begin(), preimage[v].end());
    }
    std::sort(out.begin(), out.end());
    ensure(std::adjacent_find(out.begin(), out.end()) == out.end(),
           "trace preimages overlap");
    return out;
  }

  bool operator==(const ContractionTrace&) const = default;
};

struct Minor {
  Graph graph;
  ContractionTrace trace;

  static Minor of(Graph g) {
    auto trace = ContractionTrace::identity(g.vertex_count());
    return {std::move(g), std::move(trace)};
  }
};

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

inline std::size_t min_degree(const Graph& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return g.empty() ? 0 : best;
}

/// External neighborhood: vertices outside S with a neighbor in S.
inline VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s) {
  std::vector<char> in_s(g.vertex_count(), 0);
  for (Vertex v : s) {
    g.degree(v);  // range check
    in_s[v] = 1;
  }
  std::vector<char> mark(g.vertex_count(), 0);
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_s[w]) mark[w] = 1;
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

/// Number of triangles through the edge (u, v).
inline std::size_t edge_triangle_count(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    fail(ErrorKind::invalid_argument,
         "(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
  }
  return intersection_size(g.neighbors(u), g.neighbors(v));
}

inline Vertex contract_edge_raw(Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    fail(ErrorKind::invalid_argument,
         "(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
  }
  const Vertex lo = std::min(u, v);
  const Vertex hi = std::max(u, v);
  const auto hi_neighbors = g.neighbors(hi);
  const std::vector<Vertex> moved(hi_neighbors.begin(), hi_neighbors.end());
  for (Vertex w : moved) {
    g.remove_edge(hi, w);
    if (w != lo) g.add_edge(lo, w);
  }
  g.remove_vertex(hi);
  return lo;
}

/// Merges u and v into the lower of the two ids, collapsing parallel edges.
/// The higher id disappears and later ids shift down. Returns the merged id.
inline Vertex contract_edge(Graph& g, ContractionTrace& trace, Vertex u, Vertex v) {
  ensure(trace.live_count() == g.vertex_count(), "trace out of sync with graph");
  const Vertex lo = contract_edge_raw(g, u, v);
  const Vertex hi = std::max(u, v);
  trace.preimage[lo] = set_union(trace.preimage[lo], trace.preimage[hi]);
  trace.preimage.erase(trace.preimage.begin() + hi);
  return lo;
}

inline void delete_vertex(Graph& g, ContractionTrace& trace, Vertex v) {
  ensure(trace.live_count() == g.vertex_count(), "trace out of sync with graph");
  g.remove_vertex(v);
  trace.preimage.erase(trace.preimage.begin() + v);
}

/// Induced subgraph together with the map from its ids back to the parent's.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  VertexSet lift(const VertexSet& local) const {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) {
      if (v >= to_parent.size()) fail(ErrorKind::internal, "subgraph lift out of range");
      out.push_back(to_parent[v]);
    }
    return normalized(std::move(out));
  }

  /// Inverse of lift; parent ids outside the subgraph are dropped.
  VertexSet project(const VertexSet& parent) const {
    VertexSet out;
    for (Vertex p : parent) {
      auto it = std::lower_bound(to_parent.begin(), to_parent.end(), p);
      if (it != to_parent.end() && *it == p) {
        out.push_back(static_cast<Vertex>(it - to_parent.begin()));
      }
    }
    return out;
  }
};

inline Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) fail(ErrorKind::invalid_argument, "induced subgraph of an empty vertex set");
  const VertexSet keep = normalized(s);
  constexpr Vertex absent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(g.vertex_count(), absent);
  for (Vertex i = 0; i < keep.size(); ++i) {
    g.degree(keep[i]);  // range check
    local[keep[i]] = i;
  }
  Subgraph out{Graph(keep.size()), keep};
  for (Vertex i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      if (local[w] != absent && i < local[w]) out.graph.add_edge(i, local[w]);
    }
  }
  return out;
}

/// Components ordered by their lowest vertex id; each component is sorted.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    VertexSet comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

/// Components of g[s] without materializing the induced subgraph.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  std::vector<char> seen(s.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < s.size(); ++root) {
    if (seen[root]) continue;
    VertexSet comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(s[i]);
      for (Vertex w : g.neighbors(s[i])) {
        auto it = std::lower_bound(s.begin(), s.end(), w);
        if (it != s.end() && *it == w) {
          auto j = static_cast<std::size_t>(it - s.begin());
          if (!seen[j]) {
            seen[j] = 1;
            stack.push_back(j);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// BFS from all sources at once, expanding frontier vertices and their
/// neighbors in ascending id order. Stops at the first target reached and
/// returns the path from a source to it. Sources that are targets give a
/// one-vertex path.
inline std::optional<std::vector<Vertex>> bfs_path(const Graph& g, const VertexSet& sources,
                                                   const VertexSet& targets) {
  constexpr Vertex none = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> parent(g.vertex_count(), none);
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    g.degree(s);
    if (contains(targets, s)) return std::vector<Vertex>{s};
    seen[s] = 1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      if (contains(targets, w)) {
        std::vector<Vertex> path{w};
        while (parent[path.back()] != none) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

inline std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u, Vertex v) {
  return bfs_path(g, VertexSet{u}, VertexSet{v});
}

inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto unreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), unreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == unreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// Longest shortest-path length; nullopt when g is disconnected.
inline std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

/// Minimum over pairs in S of the number of common neighbors inside S.
inline std::size_t min_pairwise_common_neighbors(const Graph& g, const VertexSet& s) {
  const VertexSet set = normalized(s);
  if (set.size() < 2) fail(ErrorKind::invalid_argument, "need at least two vertices");
  std::vector<VertexSet> inside(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto n = g.neighbors(set[i]);
    std::set_intersection(n.begin(), n.end(), set.begin(), set.end(),
                          std::back_inserter(inside[i]));
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      best = std::min(best, intersection_size(inside[i], inside[j]));
    }
  }
  return best;
}

}  // namespace kminor
