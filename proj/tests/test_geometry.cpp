#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "tperf/error.hpp"
#include "tperf/lp.hpp"
#include "tperf/polytopes.hpp"

using namespace tperf;

namespace {

// Unit box plus random rows with small integer coefficients and rhs >= 0 so
// the origin stays feasible.
HPolytope random_polytope(oracle::Rng& rng, int d, int extra) {
  HPolytope p{d, {}};
  for (int i = 0; i < d; ++i) {
    QVec lo(d, 0), hi(d, 0);
    lo[i] = -1;
    hi[i] = 1;
    p.rows.push_back({lo, 0, RowKind::Nonnegativity, {i}});
    p.rows.push_back({hi, 1, RowKind::Bound, {i}});
  }
  std::uniform_int_distribution<int> coeff(-2, 3), rhs(0, 4);
  for (int k = 0; k < extra; ++k) {
    QVec row(d);
    for (auto& x : row) x = coeff(rng);
    Rational b(rhs(rng), 2);
    b.canonicalize();
    p.rows.push_back({row, b, RowKind::Other, {}});
  }
  return p;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("double description matches row-subset enumeration") {
  oracle::Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const int d = 2 + i % 3;
    const HPolytope p = random_polytope(rng, d, 1 + i % 4);
    CHECK(enumerate_vertices(p).vertices == oracle::polytope_vertices(p));
  }
}

TEST_CASE("double description on stable set relaxations of small graphs") {
  oracle::Rng rng(22);
  for (int i = 0; i < 25; ++i) {
    const Graph g = oracle::random_graph(rng, 3 + i % 3, 0.5);
    const HPolytope p = tstab(g);
    CHECK(enumerate_vertices(p).vertices == oracle::polytope_vertices(p));
  }
}

TEST_CASE("TSTAB of K4 has the all-thirds vertex") {
  const auto v = enumerate_vertices(tstab(complete(4))).vertices;
  CHECK(v.size() == 6);
  CHECK(std::find(v.begin(), v.end(), QVec(4, Rational(1, 3))) != v.end());
}

TEST_CASE("unbounded systems are rejected") {
  HPolytope p{2, {{{-1, 0}, 0, RowKind::Nonnegativity, {0}}, {{0, -1}, 0, RowKind::Nonnegativity, {1}}}};
  CHECK_THROWS_AS(enumerate_vertices(p), Unbounded);
}

TEST_CASE("hull of points recovers the square") {
  const std::vector<QVec> pts{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {Rational(1, 2), Rational(1, 2)}};
  const HPolytope h = hull_of_points(2, pts);
  CHECK(h.rows.size() == 4);
  CHECK(enumerate_vertices(h).vertices == std::vector<QVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("text form round-trips") {
  oracle::Rng rng(23);
  const HPolytope p = random_polytope(rng, 3, 2);
  std::istringstream in(to_text(p));
  const HPolytope q = read_hpolytope(in);
  CHECK(to_text(q) == to_text(p));
  const VRep v = enumerate_vertices(p);
  std::istringstream vin(to_text(v));
  CHECK(read_vrep(vin).vertices == v.vertices);
}

TEST_CASE("simplex optimum and dual certificate") {
  oracle::Rng rng(24);
  std::uniform_int_distribution<int> small(0, 4), pos(1, 6);
  for (int i = 0; i < 40; ++i) {
    const int m = 2 + i % 4, n = 2 + i % 3;
    std::vector<QVec> a(m, QVec(n));
    QVec b(m), c(n);
    for (auto& row : a)
      for (auto& x : row) x = small(rng);
    for (auto& x : b) x = pos(rng);
    for (auto& x : c) x = pos(rng);
    // Keep every variable bounded.
    for (int j = 0; j < n; ++j) a[j % m][j] += 1;
    const LpResult r = simplex_max(a, b, c);
    CHECK(dot(c, r.point) == r.value);
    for (int k = 0; k < m; ++k) CHECK(dot(a[k], r.point) <= b[k]);
    // Duals are nonnegative, dual feasible, and certify the optimum.
    REQUIRE(r.dual.size() == static_cast<std::size_t>(m));
    for (const auto& y : r.dual) CHECK(y >= 0);
    CHECK(dot(b, r.dual) == r.value);
    for (int j = 0; j < n; ++j) {
      Rational col = 0;
      for (int k = 0; k < m; ++k) col += a[k][j] * r.dual[k];
      CHECK(col >= c[j]);
    }
  }
}

TEST_CASE("simplex reports unbounded and infeasible programs") {
  CHECK_THROWS_AS(simplex_max({{1, -1}}, {1}, {1, 1}), Unbounded);
  CHECK_THROWS_AS(simplex_max({{1, 1}, {-1, -1}}, {1, -2}, {1, 1}), Infeasible);
}

TEST_CASE("convex hull membership") {
  const std::vector<QVec> tri{{0, 0}, {1, 0}, {0, 1}};
  CHECK(in_convex_hull(tri, {Rational(1, 3), Rational(1, 3)}));
  CHECK_FALSE(in_convex_hull(tri, {1, 1}));
}

TEST_CASE("redundant rows are dropped") {
  HPolytope p{1, {{{-1}, 0, RowKind::Nonnegativity, {0}}, {{1}, 1, RowKind::Bound, {0}}, {{1}, 2, RowKind::Other, {}}}};
  CHECK(remove_redundant(p).rows.size() == 2);
}
