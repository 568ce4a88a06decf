#pragma once

// Graph families and brute-force oracles shared by the test binaries. The
// oracles deliberately avoid the library's algorithms: they only use the
// Graph container and plain enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kminor/graph.hpp"
#include "kminor/random.hpp"

namespace kminor::testing {

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

inline Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// Center 0, leaves 1..leaves.
inline Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  return g;
}

/// Outer 5-cycle 0..4, spokes i - (i+5), inner pentagram on 5..9.
inline Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

/// Two cliques of the given size overlapping in `shared` vertices. The
/// shared vertices are the last ones of the first clique.
inline Graph glued_cliques(std::size_t size, std::size_t shared) {
  const std::size_t n = 2 * size - shared;
  Graph g(n);
  for (Vertex u = 0; u < size; ++u)
    for (Vertex v = u + 1; v < size; ++v) g.add_edge(u, v);
  const auto offset = static_cast<Vertex>(size - shared);
  for (Vertex u = offset; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Independent G(n, p) used by property tests; not the io generator.
inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

inline Graph from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) g.add_edge(u, v);
  return g;
}

inline std::size_t count_components_without(const Graph& g, std::uint32_t removed_mask) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::size_t comps = 0;
  for (Vertex r = 0; r < n; ++r) {
    if ((removed_mask >> r & 1) || seen[r]) continue;
    ++comps;
    std::vector<Vertex> stack{r};
    seen[r] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!(removed_mask >> w & 1) && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return comps;
}

/// True iff some vertex set of size < k disconnects g (n <= 20).
inline bool brute_has_small_cut(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= k || n - size < 2) continue;
    if (count_components_without(g, mask) >= 2) return true;
  }
  return false;
}

inline bool separates(const Graph& g, std::uint32_t removed, Vertex u, Vertex v) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{u};
  seen[u] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    if (x == v) return false;
    for (Vertex w : g.neighbors(x)) {
      if (!(removed >> w & 1) && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

/// Size of a smallest u-v vertex cut for nonadjacent u, v (n <= 20).
inline std::size_t brute_min_uv_cut(const Graph& g, Vertex u, Vertex v) {
  const std::size_t n = g.vertex_count();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask >> u & 1) || (mask >> v & 1)) continue;
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size < best && separates(g, mask, u, v)) best = size;
  }
  return best;
}

namespace detail {

inline std::size_t clique_number(const std::vector<std::uint32_t>& adj) {
  const std::size_t n = adj.size();
  std::size_t best = n == 0 ? 0 : 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t v = 0; v < n && clique; ++v)
      if (mask >> v & 1) clique = (adj[v] | (1u << v)) == ((adj[v] | (1u << v)) | mask);
    if (clique) best = size;
  }
  return best;
}

inline std::vector<std::uint32_t> contract_bits(const std::vector<std::uint32_t>& adj,
                                                std::size_t lo, std::size_t hi) {
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> merged(adj);
  merged[lo] = (merged[lo] | merged[hi]) & ~((1u << lo) | (1u << hi));
  for (std::size_t w = 0; w < n; ++w) {
    if (merged[w] >> hi & 1) merged[w] = (merged[w] & ~(1u << hi)) | (w == lo ? 0 : 1u << lo);
  }
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < n; ++w) {
    if (w == hi) continue;
    std::uint32_t row = 0;
    for (std::size_t x = 0, y = 0; x < n; ++x) {
      if (x == hi) continue;
      if (merged[w] >> x & 1) row |= 1u << y;
      ++y;
    }
    out.push_back(row);
  }
  return out;
}

inline std::size_t contraction_search(const std::vector<std::uint32_t>& adj,
                                      std::map<std::vector<std::uint32_t>, std::size_t>& memo) {
  if (auto it = memo.find(adj); it != memo.end()) return it->second;
  std::size_t best = clique_number(adj);
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (std::size_t v = u + 1; v < adj.size(); ++v)
      if (adj[u] >> v & 1) best = std::max(best, contraction_search(contract_bits(adj, u, v), memo));
  memo[adj] = best;
  return best;
}

}  // namespace detail

/// Hadwiger number as the largest clique over all edge-contraction
/// sequences. Independent of the branch-set search in verify.hpp.
inline std::size_t contraction_hadwiger(const Graph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::map<std::vector<std::uint32_t>, std::size_t> memo;
  return detail::contraction_search(adj, memo);
}

inline bool set_is_connected(const Graph& g, const VertexSet& set) {
  if (set.empty()) return false;
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : set) in[v] = 1;
  std::vector<Vertex> stack{set.front()};
  in[set.front()] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (in[w] == 1) {
        in[w] = 2;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == set.size();
}

/// Disjoint, connected preimages and an original edge behind every minor
/// edge.
inline bool trace_consistent(const Graph& original, const Graph& minor,
                             const ContractionTrace& trace) {
  if (trace.live_count() != minor.vertex_count()) return false;
  std::vector<int> owner(original.vertex_count(), -1);
  for (Vertex x = 0; x < trace.live_count(); ++x) {
    const auto& pre = trace.preimage[x];
    if (pre.empty()) return false;
    for (Vertex v : pre) {
      if (owner[v] != -1) return false;
      owner[v] = static_cast<int>(x);
    }
    if (!set_is_connected(original, pre)) return false;
  }
  for (auto [a, b] : minor.edges()) {
    bool lifted = false;
    for (Vertex v : trace.preimage[a])
      for (Vertex w : original.neighbors(v)) lifted |= owner[w] == static_cast<int>(b);
    if (!lifted) return false;
  }
  return true;
}

/// Single-move oracle for the reducer: applies every delete-edge, contract
/// and delete-vertex move to a copy, recomputes the counts from scratch and
/// reports the moves that keep |E| >= d|V| (the ones that shrink |V|+|E|
/// while preserving the density ratio).
struct OracleMove {
  int kind;  // 0 delete-edge, 1 contract, 2 delete-vertex
  Vertex u;
  Vertex v;
};

inline std::vector<OracleMove> brute_legal_moves(const Graph& g, unsigned d) {
  std::vector<OracleMove> out;
  auto keeps_density = [&](const Graph& h) {
    std::size_t deg_sum = 0;
    for (Vertex v = 0; v < h.vertex_count(); ++v) deg_sum += h.neighbors(v).size();
    return deg_sum / 2 >= static_cast<std::size_t>(d) * h.vertex_count();
  };
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    if (keeps_density(h)) out.push_back({0, u, v});
  }
  for (auto [u, v] : g.edges()) {
    Graph h(g.vertex_count() - 1);
    auto id = [&](Vertex x) { return x == v ? u : (x > v ? x - 1 : x); };
    for (auto [a, b] : g.edges())
      if (id(a) != id(b)) h.add_edge(id(a), id(b));
    if (keeps_density(h)) out.push_back({1, u, v});
  }
  if (g.vertex_count() >= 2) {
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      Graph h = g;
      h.remove_vertex(x);
      if (keeps_density(h)) out.push_back({2, x, x});
    }
  }
  return out;
}

}  // namespace kminor::testing
