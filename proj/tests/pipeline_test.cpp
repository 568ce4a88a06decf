#include <gtest/gtest.h>

#include "kminor/io.hpp"
#include "kminor/pipeline.hpp"
#include "support.hpp"

using namespace kminor;
using namespace kminor::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::internal;
}

PipelineConfig config(unsigned d, std::uint64_t seed, Mode mode = Mode::best_effort) {
  PipelineConfig cfg;
  cfg.d = d;
  cfg.seed = seed;
  cfg.mode = mode;
  return cfg;
}

}  // namespace

TEST(PickMinDegreeVertex, Examples) {
  EXPECT_EQ(pick_min_degree_vertex(complete(4)), 0u);
  EXPECT_EQ(pick_min_degree_vertex(star(4)), 1u);
  const auto rm = reduce(complete(5), 2);
  EXPECT_EQ(pick_min_degree_vertex(rm.graph), 0u);
  EXPECT_LE(rm.graph.degree(0), 4u);
  EXPECT_THROW(pick_min_degree_vertex(Graph()), Error);
}

TEST(ExtractDenseNeighborhood, CompleteFiveAtDensityTwo) {
  const auto dense = extract_dense_neighborhood(reduce(complete(5), 2));
  EXPECT_EQ(dense.center, 0u);
  EXPECT_EQ(dense.h.graph, complete(4));
  EXPECT_EQ(dense.h.to_parent, (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(ExtractDenseNeighborhood, TriangleAtDensityOne) {
  const auto rm = reduce(complete(3), 1);
  EXPECT_EQ(rm.graph, complete(3));
  EXPECT_EQ(extract_dense_neighborhood(rm).h.graph, complete(2));
}

TEST(ExtractDenseNeighborhood, CorruptedInputIsAnInternalError) {
  auto rm = reduce(complete(5), 2);
  rm.d = 4;  // H = K_4 has min degree 3 < 4
  EXPECT_EQ(kind_of([&] { extract_dense_neighborhood(rm); }), ErrorKind::internal);
}

TEST(ExpandBranchSets, IdentityTrace) {
  const std::vector<VertexSet> sets{{0, 2}, {1}};
  EXPECT_EQ(expand_branch_sets(ContractionTrace::identity(4), sets), sets);
}

TEST(ExpandBranchSets, ContractedFourCycle) {
  const auto rm = reduce(cycle(4), 1);
  EXPECT_EQ(expand_branch_sets(rm.trace, {{0}}), (std::vector<VertexSet>{{0, 1}}));
  EXPECT_EQ(expand_branch_sets(rm.trace, {{0}, {1}, {2}}),
            (std::vector<VertexSet>{{0, 1}, {2}, {3}}));
}

TEST(GuaranteeIterations, Formula) {
  EXPECT_EQ(guarantee_iterations(1), 0u);
  EXPECT_EQ(guarantee_iterations(2), 0u);
  EXPECT_EQ(guarantee_iterations(9), 0u);
  // 100 / (10 * 2.14597) = 4.66; 1000 / (10 * 2.62826) = 38.05.
  EXPECT_EQ(guarantee_iterations(100), 4u);
  EXPECT_EQ(guarantee_iterations(1000), 38u);
}

TEST(RunPipeline, CompleteTwentyGolden) {
  const auto r = run_pipeline(complete(20), config(9, 0));
  EXPECT_EQ(r.certificate.order(), 3u);
  EXPECT_EQ(r.certificate.branch_sets,
            (std::vector<VertexSet>{{7, 8, 14, 16, 17, 19}, {5, 11, 12, 13, 15}, {2, 4, 9, 18}}));
  EXPECT_TRUE(verify_certificate(complete(20), r.certificate.branch_sets).valid);
  EXPECT_EQ(r.stats.reduced_vertices, 20u);
  EXPECT_EQ(r.stats.reduced_edges, 180u);
  EXPECT_EQ(r.stats.dense_vertices, 18u);
  EXPECT_EQ(r.stats.core_vertices, 18u);
  EXPECT_FALSE(r.stats.core_split);
  EXPECT_EQ(r.stats.iterations, 3u);
}

TEST(RunPipeline, DensityTooLow) {
  EXPECT_EQ(kind_of([] { run_pipeline(cycle(5), config(3, 0)); }), ErrorKind::density_too_low);
  EXPECT_EQ(kind_of([] { run_pipeline(cycle(5), config(0, 0)); }), ErrorKind::invalid_argument);
}

TEST(RunPipeline, CommittedGnpSeedsAllVerify) {
  const Graph g = parse_edge_list(read_text_file(KMINOR_TEST_DATA "/gnp_200_02.txt"));
  const unsigned d = static_cast<unsigned>(g.edge_count() / g.vertex_count());
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = run_pipeline(g, config(d, seed));
    EXPECT_GE(r.certificate.order(), 1u);
    EXPECT_TRUE(verify_certificate(g, r.certificate.branch_sets).valid) << "seed " << seed;
    EXPECT_EQ(r.certificate.d, d);
    EXPECT_EQ(r.certificate.seed, seed);
  }
}

TEST(RunPipeline, GuaranteeModeRunsExactIterationCount) {
  const auto r = run_pipeline(complete(20), config(9, 0, Mode::guarantee));
  EXPECT_EQ(r.certificate.order(), 1u);
  EXPECT_EQ(r.stats.iterations, 1u);
  EXPECT_TRUE(r.stats.small_d_regime);
  EXPECT_EQ(r.stats.stop_reason, StopReason::target_reached);
  EXPECT_EQ(r.certificate.mode, Mode::guarantee);
}

TEST(RunPipeline, IterationOverrideCapsTheLoop) {
  auto cfg = config(9, 0);
  cfg.iteration_override = 2;
  const auto r = run_pipeline(complete(20), cfg);
  EXPECT_EQ(r.certificate.order(), 2u);
  EXPECT_EQ(r.stats.stop_reason, StopReason::target_reached);
}

TEST(RunPipeline, GuaranteeModeFailsLoudly) {
  // The first branch set has 6 vertices, which already exceeds d/3 = 3.
  auto cfg = config(9, 0, Mode::guarantee);
  cfg.iteration_override = 2;
  EXPECT_EQ(kind_of([&] { run_pipeline(complete(20), cfg); }),
            ErrorKind::precondition_violated);
}

TEST(PipelineProperty, Deterministic) {
  Rng rng(83);
  for (int round = 0; round < 20; ++round) {
    const Graph g = random_graph(40 + rng.below(40), 0.4, rng);
    const unsigned d = static_cast<unsigned>(g.edge_count() / g.vertex_count());
    const auto seed = rng.next();
    const auto a = run_pipeline(g, config(d, seed));
    const auto b = run_pipeline(g, config(d, seed));
    EXPECT_EQ(a.certificate, b.certificate);
  }
}

TEST(PipelineProperty, NeverExceedsHadwigerNumber) {
  Rng rng(89);
  int checked = 0;
  for (int round = 0; round < 300; ++round) {
    const Graph g = random_graph(3 + rng.below(8), 0.3 + 0.6 * rng.unit(), rng);
    const unsigned d = static_cast<unsigned>(g.edge_count() / g.vertex_count());
    if (d == 0) continue;
    for (Mode mode : {Mode::best_effort, Mode::guarantee}) {
      const auto r = run_pipeline(g, config(d, rng.next(), mode));
      EXPECT_TRUE(verify_certificate(g, r.certificate.branch_sets).valid);
      EXPECT_LE(r.certificate.order(), hadwiger_number(g));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}
