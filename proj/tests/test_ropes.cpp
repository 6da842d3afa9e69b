#include <doctest.h>

#include "support.hpp"
#include "tperf/error.hpp"
#include "tperf/ropes.hpp"

using namespace tperf;

TEST_CASE("generated ropes verify") {
  for (int r = 2; r <= 5; ++r) {
    const auto gen = generate_rope(r, 7, 8);
    CHECK(verify_rope(gen.graph, gen.rope));
    CHECK(gen.rope.r() == r);
  }
  const auto shell = generate_rope_shell(4, 7, 8);
  CHECK(verify_rope(shell.graph, shell.rope));
}

TEST_CASE("rope audit names the failing clause") {
  const auto gen = generate_rope(3, 7, 8);
  const auto& seg = gen.rope.segments[0];
  // Deleting an interior odd-path edge breaks every cycle through it.
  const Graph cut = oracle::remove_edge(gen.graph, seg.odd[1], seg.odd[2]);
  const RopeVerdict v = verify_rope(cut, gen.rope);
  CHECK_FALSE(v);
  CHECK_FALSE(v.clause.empty());
  // A chord on a shared cycle makes it non-induced.
  const Graph chord = oracle::add_edge(gen.graph, seg.odd[1], gen.rope.segments[1].odd[1]);
  CHECK_FALSE(verify_rope(chord, gen.rope));
  auto swapped = gen.rope;
  std::swap(swapped.segments[0].odd, swapped.segments[0].even);
  CHECK_FALSE(verify_rope(gen.graph, swapped));
}

TEST_CASE("random rope mutations are rejected") {
  oracle::Rng rng(61);
  const auto gen = generate_rope(3, 7, 8);
  const int n = gen.graph.order();
  int tried = 0;
  for (int k = 0; k < 400 && tried < 30; ++k) {
    const Vertex a = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const Vertex b = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (a == b || gen.graph.adjacent(a, b) || !oracle::share_a_cycle(gen.rope, a, b)) continue;
    ++tried;
    CHECK_FALSE(verify_rope(oracle::add_edge(gen.graph, a, b), gen.rope));
  }
  CHECK(tried == 30);
}

TEST_CASE("gradings") {
  const Graph g = cycle(5);
  const StableGrading ok{{{0, 2}, {1, 3}, {4}}};
  CHECK(verify_grading(g, ok));
  CHECK(grade_of(g, ok) == std::vector<int>{0, 1, 0, 1, 2});
  CHECK_FALSE(verify_grading(g, StableGrading{{{0, 1}, {2, 3}, {4}}}));
  CHECK_FALSE(verify_grading(g, StableGrading{{{0, 2}, {1, 3}}}));
}

TEST_CASE("earlier witness against the colouring oracle") {
  oracle::Rng rng(62);
  int done = 0;
  for (int i = 0; i < 200 && done < 40; ++i) {
    const Graph g = oracle::random_graph(rng, 6 + i % 5, 0.5);
    const int chi = oracle::chromatic_number(g);
    if (chi < 3) continue;
    const auto gr = oracle::random_grading(g, rng);
    const int c = 1 + i % (chi - 2);
    const auto w = earlier_witness(g, gr, c);
    CHECK(audit_earlier_witness(g, gr, c, w, false));
    CHECK(oracle::connected_within(g, w.x));
    CHECK(oracle::chromatic_number_of(g, w.x) >= c);
    ++done;
  }
  CHECK(done == 40);
}

TEST_CASE("earlier witness on the triangle example") {
  // Grading ({a}, {b}, {c}) of a triangle: with c = 1 the witness is X = {c}
  // and the edge ab.
  const Graph g = complete(3);
  const StableGrading gr{{{0}, {1}, {2}}};
  const auto w = earlier_witness(g, gr, 1);
  CHECK(w.x == VertexSet{2});
  CHECK(std::minmax(w.u, w.v) == std::minmax<Vertex>(0, 1));
  CHECK(audit_earlier_witness(g, gr, 1, w, false));
  CHECK_THROWS_AS(earlier_witness(g, gr, 2), PreconditionError);
}

TEST_CASE("triangle-free earlier witness") {
  oracle::Rng rng(63);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::shuffled(grotzsch(), rng);
    const auto gr = oracle::random_grading(g, rng);
    const auto w = earlier_witness_tf(g, gr, 1);
    CHECK(audit_earlier_witness(g, gr, 1, w, true));
  }
  CHECK_THROWS_AS(earlier_witness_tf(cycle(5), StableGrading{{{0, 2}, {1, 3}, {4}}}, 1), PreconditionError);
}

TEST_CASE("threshold formulas") {
  CHECK(induction_threshold(1) == 23);
  CHECK(broken_rope_threshold(1, 1) == 23);
  CHECK(broken_rope_threshold(2, 2) == 191);
  CHECK(rope_finding_threshold(1) == 69);
  for (int r = 1; r <= 6; ++r) CHECK(rope_finding_threshold(r) == 2 * broken_rope_threshold(r, 3) - 1);
  const PipelineConstants pc;
  CHECK(pc.total() == 199053);
  CHECK(pc.level_bound() == 99525);
  CHECK(rope_finding_threshold(5) == Rational(static_cast<long>(pc.level_bound())));
}

TEST_CASE("strict mode refuses small instances") {
  const Graph g = cycle(13);
  VertexSet all(13);
  std::iota(all.begin(), all.end(), 0);
  CHECK_THROWS_AS(find_rope(g, all, 2, Thresholds{true, 1}), ThresholdUnmet);
  CHECK_THROWS_AS(rope_induction_step(g, all, {}, 0, Thresholds{true, 1}), ThresholdUnmet);
}

TEST_CASE("relaxed rope finding on the comb fixture") {
  const Graph comb = comb_shell_fixture();
  VertexSet all(comb.order());
  std::iota(all.begin(), all.end(), 0);
  const auto rope = find_rope(comb, all, 2);
  CHECK(rope.r() == 2);
  CHECK(verify_rope(comb, rope));
}

TEST_CASE("relaxed rope finding fails cleanly on a cycle") {
  const Graph g = cycle(13);
  VertexSet all(13);
  std::iota(all.begin(), all.end(), 0);
  CHECK_THROWS_AS(find_rope(g, all, 2), RopeFailure);
  CHECK_THROWS_AS(find_rope(cycle(9), {0, 1, 2, 3, 4, 5, 6, 7, 8}, 2), PreconditionError);
}
