#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kminor/connectivity.hpp"
#include "kminor/error.hpp"
#include "kminor/graph.hpp"
#include "kminor/random.hpp"
#include "kminor/reducer.hpp"
#include "kminor/sampler.hpp"
#include "kminor/verify.hpp"

namespace kminor {

enum class Mode { best_effort, guarantee };

inline std::string_view to_string(Mode mode) {
  return mode == Mode::guarantee ? "guarantee" : "best-effort";
}

inline std::optional<Mode> parse_mode(std::string_view word) {
  if (word == "best-effort") return Mode::best_effort;
  if (word == "guarantee") return Mode::guarantee;
  return std::nullopt;
}

struct PipelineConfig {
  unsigned d = 1;
  std::uint64_t seed = 0;
  Mode mode = Mode::best_effort;
  std::size_t retry_cap = 1000;
  std::optional<std::size_t> iteration_override;
  // Check diameter <= 14 whenever |V(H_i)| < 6 min-degree(H_i).
  bool check_diameter = true;
};

/// Branch sets over the original graph's ids, plus what is needed to
/// re-derive them.
struct MinorCertificate {
  std::vector<VertexSet> branch_sets;
  unsigned d = 0;
  std::uint64_t seed = 0;
  Mode mode = Mode::best_effort;

  std::size_t order() const noexcept { return branch_sets.size(); }
  bool operator==(const MinorCertificate&) const = default;
};

enum class StopReason {
  target_reached,
  vertices_exhausted,
  working_graph_degenerate,  // disconnected or min degree <= d/3
  precondition_violated,
  sampler_failed,
  join_overflow,
};

inline std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::target_reached: return "target-reached";
    case StopReason::vertices_exhausted: return "vertices-exhausted";
    case StopReason::working_graph_degenerate: return "working-graph-degenerate";
    case StopReason::precondition_violated: return "precondition-violated";
    case StopReason::sampler_failed: return "sampler-failed";
    case StopReason::join_overflow: return "join-overflow";
  }
  return "unknown";
}

struct PipelineStats {
  std::size_t iterations = 0;
  std::size_t rounds = 0;   // sampler rounds over all iterations
  std::size_t retries = 0;  // rounds - iterations
  std::size_t cumulative_deleted = 0;
  std::size_t reduced_vertices = 0;
  std::size_t reduced_edges = 0;
  std::size_t dense_vertices = 0;
  std::size_t core_vertices = 0;
  bool core_split = false;
  bool loose_side_flag = false;
  // The guarantee-mode iteration count d / (10 sqrt(ln d)) is below 2.
  bool small_d_regime = false;
  StopReason stop_reason = StopReason::target_reached;
};

struct PipelineResult {
  MinorCertificate certificate;
  PipelineStats stats;
};

/// floor(d / (10 sqrt(ln d))), and 0 for d = 1 where ln d vanishes.
inline std::size_t guarantee_iterations(unsigned d) {
  if (d < 2) return 0;
  const double x = static_cast<double>(d) / (10.0 * std::sqrt(std::log(static_cast<double>(d))));
  return static_cast<std::size_t>(std::floor(x));
}

/// Minimum-degree vertex, lowest id on ties.
inline Vertex pick_min_degree_vertex(const Graph& g) {
  if (g.empty()) fail(ErrorKind::invalid_argument, "empty graph has no vertices");
  Vertex best = 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) < g.degree(best)) best = v;
  }
  return best;
}

struct DenseNeighborhood {
  Vertex center = 0;
  Subgraph h;  // h.to_parent maps into the reduced minor
};

/// H = G'[N(v)] for a minimum-degree v of the reduced minor. At a reducer
/// fixpoint |V(H)| <= 2d and min-degree(H) >= d; anything else is a bug.
inline DenseNeighborhood extract_dense_neighborhood(const ReducedMinor& rm) {
  const Vertex v = pick_min_degree_vertex(rm.graph);
  const auto nbrs = rm.graph.neighbors(v);
  ensure(!nbrs.empty(), "minimum-degree vertex of the reduced minor is isolated");
  DenseNeighborhood out{v, induced_subgraph(rm.graph, VertexSet(nbrs.begin(), nbrs.end()))};
  const std::size_t d = rm.d;
  ensure(out.h.graph.vertex_count() <= 2 * d,
         "dense neighborhood has " + std::to_string(out.h.graph.vertex_count()) +
             " vertices, more than 2d=" + std::to_string(2 * d));
  ensure(min_degree(out.h.graph) >= d, "dense neighborhood has min degree " +
                                           std::to_string(min_degree(out.h.graph)) +
                                           " below d=" + std::to_string(d));
  return out;
}

/// Lifts branch sets of a minor to the original graph through the trace.
inline std::vector<VertexSet> expand_branch_sets(const ContractionTrace& trace,
                                                 const std::vector<VertexSet>& sets) {
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  std::vector<char> used(trace.original_vertex_count, 0);
  for (const auto& s : sets) {
    out.push_back(trace.expand(s));
    for (Vertex v : out.back()) {
      ensure(v < used.size() && !used[v], "expanded branch sets overlap");
      used[v] = 1;
    }
  }
  return out;
}

namespace detail {

inline bool stops_best_effort(ErrorKind kind) {
  return kind == ErrorKind::precondition_violated || kind == ErrorKind::sampler_failed ||
         kind == ErrorKind::join_overflow;
}

inline StopReason stop_reason_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::sampler_failed: return StopReason::sampler_failed;
    case ErrorKind::join_overflow: return StopReason::join_overflow;
    default: return StopReason::precondition_violated;
  }
}

}  // namespace detail

/// reduce -> dense neighborhood H -> connected core H1 -> iterated branch
/// sets -> expansion through the trace -> self-verification.
///
/// Branch and avoid sets are kept in H1's ids for the whole loop and
/// projected into each rebuilt H_i, so no transient id ever leaks between
/// iterations.
inline PipelineResult run_pipeline(const Graph& g, const PipelineConfig& cfg) {
  if (cfg.d == 0) fail(ErrorKind::invalid_argument, "d must be a positive integer");
  const unsigned d = cfg.d;
  PipelineResult result;
  PipelineStats& stats = result.stats;

  const ReducedMinor rm = reduce(g, d);
  stats.reduced_vertices = rm.graph.vertex_count();
  stats.reduced_edges = rm.graph.edge_count();

  const DenseNeighborhood dense = extract_dense_neighborhood(rm);
  stats.dense_vertices = dense.h.graph.vertex_count();

  const CoreResult core = extract_connected_core(dense.h.graph, d);
  const Graph& h1 = core.core.graph;
  stats.core_vertices = h1.vertex_count();
  stats.core_split = core.separation.has_value();
  stats.loose_side_flag = core.loose_side_flag;

  const bool guarantee = cfg.mode == Mode::guarantee;
  stats.small_d_regime = guarantee_iterations(d) < 2;
  std::optional<std::size_t> target = cfg.iteration_override;
  if (!target && guarantee) target = std::max<std::size_t>(1, guarantee_iterations(d));

  const std::size_t scale = 2 * static_cast<std::size_t>(d);
  VertexSet alive(h1.vertex_count());
  for (Vertex v = 0; v < alive.size(); ++v) alive[v] = v;
  std::vector<VertexSet> branches;  // H1 ids
  AvoidSets avoid;                  // H1 ids, always subsets of alive

  auto stop = [&](StopReason reason, ErrorKind kind, const std::string& why) {
    if (guarantee) fail(kind, why);
    stats.stop_reason = reason;
  };

  for (std::size_t i = 0;; ++i) {
    if (target && i >= *target) {
      stats.stop_reason = StopReason::target_reached;
      break;
    }
    if (guarantee) {
      const std::size_t per_iteration = SamplerParams::for_scale(scale).s + max_join_additions;
      ensure(stats.cumulative_deleted <= i * per_iteration, "deleted more vertices than budgeted");
      if (3 * stats.cumulative_deleted >= d) {
        fail(ErrorKind::precondition_violated,
             "deleted " + std::to_string(stats.cumulative_deleted) +
                 " vertices, not below d/3 before iteration " + std::to_string(i + 1));
      }
    }
    if (alive.empty()) {
      stop(StopReason::vertices_exhausted, ErrorKind::precondition_violated,
           "no vertices left before iteration " + std::to_string(i + 1));
      break;
    }

    const Subgraph hi = induced_subgraph(h1, alive);
    const std::size_t delta = min_degree(hi.graph);
    if (!is_connected(hi.graph) || 3 * delta <= d) {
      stop(StopReason::working_graph_degenerate, ErrorKind::precondition_violated,
           "working graph is disconnected or has min degree <= d/3 at iteration " +
               std::to_string(i + 1));
      break;
    }
    if (cfg.check_diameter && hi.graph.vertex_count() < 6 * delta) {
      const auto diam = diameter(hi.graph);
      ensure(diam && *diam <= 14, "working graph with |V| < 6 min-degree has diameter above 14");
    }

    AvoidSets local_avoid;
    local_avoid.reserve(avoid.size());
    for (const auto& a : avoid) local_avoid.push_back(hi.project(a));

    const auto params = SamplerParams::for_scale(scale, cfg.retry_cap, mix_seed(cfg.seed, i));
    VertexSet joined;
    try {
      DominatorSet sampled = sample_dominator(hi.graph, params, local_avoid);
      stats.rounds += sampled.rounds;
      joined = join_components(hi.graph, sampled.vertices);
    } catch (const Error& e) {
      if (guarantee || !detail::stops_best_effort(e.kind())) throw;
      stats.stop_reason = detail::stop_reason_for(e.kind());
      break;
    }
    ensure(check_avoidance(joined, local_avoid), "joined branch set lies inside an avoid set");
    ensure(check_domination(hi.graph, joined, params.domination_slack).ok,
           "joined branch set lost domination");
    ensure(components_within(hi.graph, joined).size() == 1, "joined branch set is disconnected");

    const VertexSet branch = hi.lift(joined);
    const VertexSet touched = hi.lift(neighborhood_of_set(hi.graph, joined));
    alive = set_difference(alive, branch);
    for (auto& a : avoid) a = set_intersection(a, alive);
    avoid.push_back(set_difference(alive, touched));
    branches.push_back(branch);
    stats.cumulative_deleted += branch.size();
    ++stats.iterations;
  }
  stats.retries = stats.rounds - stats.iterations;

  std::vector<VertexSet> minor_sets;
  minor_sets.reserve(branches.size());
  for (const auto& b : branches) minor_sets.push_back(dense.h.lift(core.core.lift(b)));

  MinorCertificate& cert = result.certificate;
  cert.branch_sets = expand_branch_sets(rm.trace, minor_sets);
  cert.d = d;
  cert.seed = cfg.seed;
  cert.mode = cfg.mode;

  const auto report = verify_certificate(g, cert.branch_sets);
  ensure(report.valid, "extracted certificate failed self-verification");
  return result;
}

}  // namespace kminor
