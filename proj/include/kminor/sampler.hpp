#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kminor/error.hpp"
#include "kminor/graph.hpp"
#include "kminor/random.hpp"

namespace kminor {

/// Parameters of one dominator search. Everything except retry_cap and seed
/// is derived from the scale n, which is supplied by the caller and is not
/// the vertex count of the graph being sampled.
struct SamplerParams {
  std::size_t n = 2;
  std::size_t s = 1;                 // ceil(3.1 sqrt(ln n))
  std::size_t domination_slack = 0;  // ceil(n exp(-sqrt(ln n) / 3))
  std::size_t component_cap = 6;
  std::size_t t_cap = 0;  // floor(n / sqrt(ln n))
  std::size_t retry_cap = 1000;
  std::uint64_t seed = 0;

  static SamplerParams for_scale(std::size_t n, std::size_t retry_cap = 1000,
                                 std::uint64_t seed = 0) {
    if (n < 2) fail(ErrorKind::invalid_argument, "sampler scale n must be at least 2");
    if (retry_cap == 0) fail(ErrorKind::invalid_argument, "retry cap must be positive");
    const double root_log = std::sqrt(std::log(static_cast<double>(n)));
    SamplerParams p;
    p.n = n;
    p.s = static_cast<std::size_t>(std::ceil(3.1 * root_log));
    p.domination_slack =
        static_cast<std::size_t>(std::ceil(static_cast<double>(n) * std::exp(-root_log / 3.0)));
    p.t_cap = static_cast<std::size_t>(std::floor(static_cast<double>(n) / root_log));
    p.retry_cap = retry_cap;
    p.seed = seed;
    return p;
  }
};

/// The sets B must not be contained in, one per earlier branch set.
using AvoidSets = std::vector<VertexSet>;

struct DominatorSet {
  VertexSet vertices;
  VertexSet non_dominated;
  std::size_t raw_size = 0;
  std::size_t joined_size = 0;
  std::vector<Vertex> draws;  // the accepted round's sequence, repetitions kept
  std::size_t rounds = 0;     // rounds used, including the accepted one
};

struct DominationCheck {
  VertexSet non_dominated;
  bool ok = false;
};

/// Outcome of a single sampling round; exposed so acceptance rates can be
/// measured without the retry loop.
struct RoundOutcome {
  std::vector<Vertex> draws;
  VertexSet support;
  DominationCheck domination;
  bool avoidance_ok = false;
  std::size_t components = 0;
  bool accepted = false;
};

inline std::vector<Vertex> draw_sample(const Graph& g, std::size_t s, Rng& rng) {
  if (g.empty()) fail(ErrorKind::invalid_argument, "cannot sample from an empty graph");
  std::vector<Vertex> draws(s);
  for (auto& v : draws) v = static_cast<Vertex>(rng.below(g.vertex_count()));
  return draws;
}

/// A vertex is dominated iff it has a neighbor in B; being in B does not count.
inline DominationCheck check_domination(const Graph& g, const VertexSet& b, std::size_t slack) {
  std::vector<char> hit(g.vertex_count(), 0);
  for (Vertex v : b) {
    for (Vertex w : g.neighbors(v)) hit[w] = 1;
  }
  DominationCheck out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!hit[v]) out.non_dominated.push_back(v);
  }
  out.ok = out.non_dominated.size() <= slack;
  return out;
}

inline bool check_avoidance(const VertexSet& b, const AvoidSets& avoid) {
  for (const auto& a : avoid) {
    if (std::includes(a.begin(), a.end(), b.begin(), b.end())) return false;
  }
  return true;
}

inline RoundOutcome sample_round(const Graph& g, const SamplerParams& params,
                                 const AvoidSets& avoid, std::uint64_t round) {
  Rng rng(mix_seed(params.seed, round));
  RoundOutcome out;
  out.draws = draw_sample(g, params.s, rng);
  out.support = normalized(out.draws);
  out.domination = check_domination(g, out.support, params.domination_slack);
  out.avoidance_ok = check_avoidance(out.support, avoid);
  out.components = components_within(g, out.support).size();
  out.accepted =
      out.domination.ok && out.avoidance_ok && out.components <= params.component_cap;
  return out;
}

/// Throws precondition_violated naming the first unmet hypothesis.
inline void check_sampler_preconditions(const Graph& g, const SamplerParams& params,
                                        const AvoidSets& avoid) {
  auto violated = [](const std::string& what) { fail(ErrorKind::precondition_violated, what); };
  if (g.empty()) violated("empty graph");
  if (g.vertex_count() > params.n) violated("vertex count above n");
  if (6 * min_degree(g) < params.n) violated("min degree");
  if (avoid.size() > params.t_cap) violated("too many avoid sets");
  for (const auto& a : avoid) {
    if (a.size() > params.domination_slack) violated("avoid set too large");
  }
}

/// Las-Vegas search for a small set that dominates all but
/// params.domination_slack vertices, escapes every avoid set and induces at
/// most params.component_cap components. Round r draws from the stream
/// (seed, r); the first accepted round wins.
inline DominatorSet sample_dominator(const Graph& g, const SamplerParams& params,
                                     const AvoidSets& avoid) {
  check_sampler_preconditions(g, params, avoid);
  for (std::size_t round = 0; round < params.retry_cap; ++round) {
    auto outcome = sample_round(g, params, avoid, round);
    if (!outcome.accepted) continue;
    DominatorSet out;
    out.raw_size = outcome.support.size();
    out.joined_size = out.raw_size;
    out.vertices = std::move(outcome.support);
    out.non_dominated = std::move(outcome.domination.non_dominated);
    out.draws = std::move(outcome.draws);
    out.rounds = round + 1;
    return out;
  }
  fail(ErrorKind::sampler_failed,
       "no acceptable sample in " + std::to_string(params.retry_cap) + " rounds");
}

inline constexpr std::size_t max_join_additions = 65;

/// Connects the components of g[B] by shortest paths from the hub (the
/// component holding B's lowest id) to each other component, in order of
/// their lowest ids. Throws join_overflow past 65 added vertices.
inline VertexSet join_components(const Graph& g, const VertexSet& b) {
  if (b.empty()) return b;
  auto comps = components_within(g, b);
  if (comps.size() == 1) return b;
  VertexSet out = b;
  const VertexSet& hub = comps.front();
  std::size_t added = 0;
  for (std::size_t c = 1; c < comps.size(); ++c) {
    auto path = bfs_path(g, hub, comps[c]);
    if (!path) fail(ErrorKind::invalid_argument, "graph is disconnected; cannot join");
    for (std::size_t i = 1; i + 1 < path->size(); ++i) {
      const Vertex w = (*path)[i];
      if (!contains(out, w)) {
        out.insert(std::lower_bound(out.begin(), out.end(), w), w);
        ++added;
      }
    }
  }
  if (added > max_join_additions) {
    fail(ErrorKind::join_overflow, std::to_string(added) + " vertices added while joining");
  }
  return out;
}

}  // namespace kminor
