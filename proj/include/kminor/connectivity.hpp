#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kminor/error.hpp"
#include "kminor/graph.hpp"

namespace kminor {

/// Result of a single Menger query: the number of internally disjoint u-v
/// paths and a minimum u-v vertex cut of the same size.
struct VertexCut {
  std::size_t path_count = 0;
  VertexSet cut;
};

/// A separation S | A | B with no A-B edges and |A| <= |B|.
struct SeparatorResult {
  VertexSet separator;
  VertexSet side_a;
  VertexSet side_b;
};

namespace detail {

// Unit vertex capacities via the split digraph: v_in = 2v, v_out = 2v + 1.
// Arcs coming from graph edges get "infinite" capacity so every minimum cut
// consists of vertex arcs only.
class SplitFlowNetwork {
 public:
  explicit SplitFlowNetwork(const Graph& g) : head_(2 * g.vertex_count(), npos) {
    const auto unbounded = static_cast<int>(g.vertex_count() + 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v, unbounded);
      add_arc(2 * v + 1, 2 * u, unbounded);
    }
  }

  std::size_t max_flow(std::size_t source, std::size_t sink) {
    std::size_t flow = 0;
    std::vector<std::size_t> via(head_.size());
    for (;;) {
      std::fill(via.begin(), via.end(), npos);
      std::deque<std::size_t> queue{source};
      via[source] = npos - 1;
      while (!queue.empty() && via[sink] == npos) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t a = head_[x]; a != npos; a = next_[a]) {
          if (cap_[a] > 0 && via[to_[a]] == npos) {
            via[to_[a]] = a;
            queue.push_back(to_[a]);
          }
        }
      }
      if (via[sink] == npos) return flow;
      for (std::size_t x = sink; x != source;) {
        const std::size_t a = via[x];
        --cap_[a];
        ++cap_[a ^ 1];
        x = to_[a ^ 1];
      }
      ++flow;
    }
  }

  std::vector<char> residual_reachable(std::size_t source) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t a = head_[x]; a != npos; a = next_[a]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          stack.push_back(to_[a]);
        }
      }
    }
    return seen;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  void add_arc(std::size_t from, std::size_t to, int cap) {
    for (auto [x, y, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
      to_.push_back(y);
      cap_.push_back(c);
      next_.push_back(head_[x]);
      head_[x] = to_.size() - 1;
    }
  }

  std::vector<std::size_t> head_;
  std::vector<std::size_t> to_;
  std::vector<std::size_t> next_;
  std::vector<int> cap_;
};

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace detail

inline VertexCut max_vertex_disjoint_paths(const Graph& g, Vertex u, Vertex v) {
  if (u == v) fail(ErrorKind::invalid_argument, "endpoints must differ");
  if (g.has_edge(u, v)) {
    fail(ErrorKind::invalid_argument, "endpoints " + std::to_string(u) + ", " +
                                          std::to_string(v) + " are adjacent");
  }
  detail::SplitFlowNetwork net(g);
  VertexCut out;
  out.path_count = net.max_flow(2 * u + 1, 2 * v);
  const auto reach = net.residual_reachable(2 * u + 1);
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (w != u && w != v && reach[2 * w] && !reach[2 * w + 1]) out.cut.push_back(w);
  }
  ensure(out.cut.size() == out.path_count, "Menger mismatch between path count and cut size");
  return out;
}

/// Finds a separator of size < k, or nullopt when g is k-connected. The
/// minimum cut over all nonadjacent pairs is taken (first pair wins ties);
/// A is the smallest component of g - S, B the rest.
inline std::optional<SeparatorResult> find_small_separator(const Graph& g, std::size_t k) {
  if (k == 0) fail(ErrorKind::invalid_argument, "k must be positive");
  if (g.vertex_count() <= k) {
    fail(ErrorKind::invalid_argument, "need more than k=" + std::to_string(k) + " vertices");
  }
  if (!is_connected(g)) fail(ErrorKind::invalid_argument, "graph is disconnected");

  std::optional<VertexCut> best;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (g.has_edge(u, v)) continue;
      auto cut = max_vertex_disjoint_paths(g, u, v);
      if (!best || cut.path_count < best->path_count) best = std::move(cut);
    }
  }
  if (!best || best->path_count >= k) return std::nullopt;

  const VertexSet& s = best->cut;
  VertexSet rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!contains(s, v)) rest.push_back(v);
  }
  auto parts = components_within(g, rest);
  ensure(parts.size() >= 2, "separator does not disconnect the graph");
  auto smallest = std::min_element(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size() || (a.size() == b.size() && a.front() < b.front());
  });
  SeparatorResult out;
  out.separator = s;
  out.side_a = *smallest;
  out.side_b = set_difference(rest, out.side_a);
  return out;
}

struct CoreResult {
  Subgraph core;  // core.to_parent maps back into H
  std::optional<SeparatorResult> separation;
  bool certified_by_common_neighbors = false;
  // |A| landed in (d - |S|, d]: allowed, but outside the strict accounting.
  bool loose_side_flag = false;
};

/// Returns H itself when it is ceil(d/3)-connected, otherwise H[A] for the
/// smaller side A of one small separator. Requires min degree >= d and at
/// most 2d vertices; the output has min degree >= ceil(2d/3).
inline CoreResult extract_connected_core(const Graph& h, unsigned d) {
  if (d == 0) fail(ErrorKind::invalid_argument, "d must be a positive integer");
  if (h.empty() || min_degree(h) < d) {
    fail(ErrorKind::invalid_argument, "core extraction needs min degree >= d=" + std::to_string(d));
  }
  if (h.vertex_count() > 2 * static_cast<std::size_t>(d)) {
    fail(ErrorKind::invalid_argument, "core extraction needs at most 2d=" +
                                          std::to_string(2 * d) + " vertices, got " +
                                          std::to_string(h.vertex_count()));
  }
  const std::size_t k = detail::ceil_div(d, 3);
  const std::size_t min_inner_degree = detail::ceil_div(2 * static_cast<std::size_t>(d), 3);
  if (!is_connected(h)) fail(ErrorKind::core_extraction_failed, "dense neighborhood disconnected");

  VertexSet all(h.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;

  CoreResult out;
  out.separation = find_small_separator(h, k);
  if (!out.separation) {
    out.core = induced_subgraph(h, all);
    return out;
  }

  const VertexSet& a = out.separation->side_a;
  const std::size_t s = out.separation->separator.size();
  ensure(a.size() <= d, "smaller side exceeds d vertices");
  out.loose_side_flag = a.size() + s > d;

  out.core = induced_subgraph(h, a);
  const Graph& core = out.core.graph;
  if (min_degree(core) < min_inner_degree) {
    fail(ErrorKind::core_extraction_failed,
         "smaller side has min degree " + std::to_string(min_degree(core)) + " < " +
             std::to_string(min_inner_degree));
  }
  if (core.vertex_count() >= 2) {
    VertexSet local(core.vertex_count());
    for (Vertex v = 0; v < local.size(); ++v) local[v] = v;
    out.certified_by_common_neighbors = min_pairwise_common_neighbors(core, local) >= k;
  }
  if (!out.certified_by_common_neighbors) {
    const bool flow_ok = core.vertex_count() > k && is_connected(core) &&
                         !find_small_separator(core, k).has_value();
    if (!flow_ok) {
      fail(ErrorKind::core_extraction_failed,
           "smaller side is not " + std::to_string(k) + "-connected");
    }
  }
  return out;
}

}  // namespace kminor
