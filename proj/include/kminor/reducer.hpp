#pragma once

// Local minimization of a minor under the density constraint |E| >= d|V|.
//
// The minor used by the existence argument minimizes |V| + |E| globally over
// all minors with |E| >= d|V|, which is not computable in practice. Only two
// consequences of that minimality are ever consumed downstream:
//
//   * |E| = d|V| exactly, and
//   * every edge lies in at least d triangles.
//
// Both already hold at any fixpoint of the three local moves below, where a
// move is legal iff it keeps |E| >= d|V|:
//
//   delete-edge      legal iff |E| - 1        >= d|V|
//   contract (u,v)   legal iff |E| - t(uv) - 1 >= d(|V| - 1)
//   delete-vertex v  legal iff |E| - deg(v)   >= d(|V| - 1), |V| >= 2
//
// With no legal delete-edge, |E| = d|V|; then contraction is legal iff
// t(uv) <= d - 1, so no legal contraction means every edge has t >= d; and
// no legal vertex deletion means every degree is at least d + 1. Every move
// lowers |V| + |E|, so reduce() stops after at most |V| + |E| moves.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kminor/error.hpp"
#include "kminor/graph.hpp"

namespace kminor {

enum class MoveKind { delete_edge, contract_edge, delete_vertex };

/// For delete_vertex, u == v is the vertex. triangles is only meaningful
/// for contract_edge.
struct Move {
  MoveKind kind;
  Vertex u;
  Vertex v;
  std::size_t triangles = 0;

  bool operator==(const Move&) const = default;
};

struct ReducedMinor {
  Graph graph;
  ContractionTrace trace;
  unsigned d = 1;
  std::size_t moves_applied = 0;
};

namespace detail {

inline std::int64_t density_slack(const Graph& g, unsigned d) {
  return static_cast<std::int64_t>(g.edge_count()) -
         static_cast<std::int64_t>(d) * static_cast<std::int64_t>(g.vertex_count());
}

inline std::size_t intersection_size_capped(std::span<const Vertex> a, std::span<const Vertex> b,
                                            std::size_t cap) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end() && n < cap) {
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

// Edge whose endpoint degree sum is largest; lexicographically lowest on ties.
inline Edge heaviest_edge(const Graph& g) {
  Edge best{0, 0};
  std::size_t best_sum = 0;
  bool found = false;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const std::size_t du = g.degree(u);
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      const std::size_t sum = du + g.degree(v);
      if (!found || sum > best_sum) {
        best = {u, v};
        best_sum = sum;
        found = true;
      }
    }
  }
  return best;
}

// Edge with the fewest triangles, lexicographically lowest on ties.
inline std::optional<Move> lightest_contraction(const Graph& g) {
  std::optional<Move> best;
  std::size_t cap = std::numeric_limits<std::size_t>::max();
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      const std::size_t t = intersection_size_capped(g.neighbors(u), g.neighbors(v), cap);
      if (t < cap) {
        best = Move{MoveKind::contract_edge, u, v, t};
        cap = t;
        if (t == 0) return best;
      }
    }
  }
  return best;
}

inline void check_density(const Graph& g, unsigned d) {
  if (d == 0) fail(ErrorKind::invalid_argument, "d must be a positive integer");
  if (g.empty()) fail(ErrorKind::density_too_low, "empty graph");
  if (density_slack(g, d) < 0) {
    fail(ErrorKind::density_too_low, std::to_string(g.edge_count()) + " edges < " +
                                         std::to_string(d) + " * " +
                                         std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace detail

/// Every legal move on g, in the order delete-edge, contract, delete-vertex
/// and lexicographic within each kind. Legality only looks at the minor a
/// move produces, so this is also meaningful when g itself is below density.
inline std::vector<Move> applicable_moves(const Graph& g, unsigned d) {
  std::vector<Move> out;
  const std::int64_t slack = detail::density_slack(g, d);
  const auto edges = g.edges();
  if (slack >= 1) {
    for (auto [u, v] : edges) out.push_back({MoveKind::delete_edge, u, v});
  }
  for (auto [u, v] : edges) {
    const std::size_t t = edge_triangle_count(g, u, v);
    if (static_cast<std::int64_t>(t) + 1 <= slack + d) {
      out.push_back({MoveKind::contract_edge, u, v, t});
    }
  }
  if (g.vertex_count() >= 2) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (static_cast<std::int64_t>(g.degree(v)) <= slack + d) {
        out.push_back({MoveKind::delete_vertex, v, v});
      }
    }
  }
  return out;
}

/// Drives the minor to a fixpoint of the move set. Priority: delete-edge
/// (heaviest endpoint-degree sum first) until |E| = d|V|, then contract the
/// edge with fewest triangles, then delete a minimum-degree vertex.
inline ReducedMinor reduce(Minor minor, unsigned d) {
  detail::check_density(minor.graph, d);
  ensure(minor.trace.live_count() == minor.graph.vertex_count(), "trace out of sync with graph");
  Graph& g = minor.graph;
  ContractionTrace& trace = minor.trace;
  std::size_t moves = 0;
  for (;;) {
    const std::int64_t slack = detail::density_slack(g, d);
    if (slack >= 1) {
      auto [u, v] = detail::heaviest_edge(g);
      g.remove_edge(u, v);
      ++moves;
      continue;
    }
    if (auto c = detail::lightest_contraction(g);
        c && static_cast<std::int64_t>(c->triangles) + 1 <= slack + d) {
      contract_edge(g, trace, c->u, c->v);
      ++moves;
      continue;
    }
    if (g.vertex_count() >= 2) {
      Vertex pick = 0;
      for (Vertex v = 1; v < g.vertex_count(); ++v) {
        if (g.degree(v) < g.degree(pick)) pick = v;
      }
      if (static_cast<std::int64_t>(g.degree(pick)) <= slack + d) {
        delete_vertex(g, trace, pick);
        ++moves;
        continue;
      }
    }
    break;
  }
  ensure(detail::density_slack(g, d) == 0, "reducer fixpoint has |E| != d|V|");
  return {std::move(g), std::move(trace), d, moves};
}

inline ReducedMinor reduce(const Graph& g, unsigned d) { return reduce(Minor::of(g), d); }

}  // namespace kminor
