#include <doctest.h>

#include "support.hpp"
#include "tperf/error.hpp"
#include "tperf/polytopes.hpp"
#include "tperf/tminors.hpp"

using namespace tperf;

namespace {

// Integrality by brute force: every vertex found by row-subset enumeration
// is a 0/1 vector.
bool integral(const HPolytope& p) {
  for (const auto& v : oracle::polytope_vertices(p))
    for (const auto& x : v)
      if (!is_integral(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("t-perfection oracle agrees with brute-force integrality") {
  oracle::Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(rng, 3 + i % 3, 0.55);
    CHECK(is_t_perfect(g).holds == integral(tstab(g)));
    CHECK(is_h_perfect(g).holds == integral(hstab(g)));
  }
}

TEST_CASE("K4 witness is the all-thirds point") {
  const auto r = is_t_perfect(complete(4));
  REQUIRE_FALSE(r.holds);
  CHECK(r.witness->point == QVec(4, Rational(1, 3)));
  CHECK(r.witness->tight.size() == 4);
  CHECK(verify_witness(complete(4), *r.witness));
}

TEST_CASE("tampered witnesses are rejected") {
  const Graph g = complete(4);
  auto w = *is_t_perfect(g).witness;
  auto moved = w;
  moved.point[0] = Rational(1, 2);
  CHECK_FALSE(verify_witness(g, moved));
  auto short_list = w;
  short_list.tight.pop_back();
  CHECK_FALSE(verify_witness(g, short_list));
  CHECK_FALSE(verify_witness(cycle(4), w));
}

TEST_CASE("relaxation row order and bound rows") {
  const HPolytope p = tstab(Graph(2));
  REQUIRE(p.rows.size() == 4);
  CHECK(p.rows[0].kind == RowKind::Nonnegativity);
  CHECK(p.rows[2].kind == RowKind::Bound);
  const HPolytope q = qstab(complete(3));
  CHECK(q.rows.back().kind == RowKind::Clique);
  CHECK(q.rows.back().support == std::vector<int>{0, 1, 2});
}

TEST_CASE("SSP vertices are stable set incidence vectors") {
  CHECK(ssp(cycle(5)).vertices.size() == 11);
  CHECK(ssp(complete(4)).vertices.size() == 5);
}

TEST_CASE("hbar-perfection works on the complement") {
  const auto r = is_hbar_perfect(cycle(7));
  REQUIRE_FALSE(r.holds);
  CHECK(r.witness->complemented);
  CHECK(verify_witness(cycle(7), *r.witness));
}

TEST_CASE("polytope cap") {
  Caps caps;
  caps.polytope = 4;
  CHECK_THROWS_AS(tstab(cycle(5), CycleMode::Chordless, caps), CapExceeded);
}

TEST_CASE("t-minor closure on a contraction of a t-perfect graph") {
  const Graph g = cycle(7);
  TMinorTrace t = start_trace(g);
  apply_step(t, {TMinorStep::Kind::Contract, 0});
  CHECK(check_tminor_closure(g, t));
  CHECK(is_t_perfect(t.result).holds);
}
