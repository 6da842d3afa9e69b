#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tperf/rational.hpp"

namespace tperf {

// Which family generated an inequality; `support` lists the vertex indices
// (an edge, a clique, an odd cycle in cyclic order) it was built from.
enum class RowKind { Nonnegativity, Edge, Clique, OddCycle, Bound, Facet, Equality, Other };

std::string to_string(RowKind kind);
RowKind parse_row_kind(const std::string& name);

// coeffs . x <= rhs
struct Inequality {
  QVec coeffs;
  Rational rhs;
  RowKind kind = RowKind::Other;
  std::vector<int> support;
};

struct HPolytope {
  int dim = 0;
  std::vector<Inequality> rows;
};

// Vertices in lexicographic order, no duplicates.
struct VRep {
  int dim = 0;
  std::vector<QVec> vertices;
};

// Double description method over integer rays. Throws Unbounded if the
// system has a recession direction or too few independent rows.
VRep enumerate_vertices(const HPolytope& p);

bool contains(const HPolytope& p, const QVec& x);
// Indices of rows satisfied with equality at x.
std::vector<int> tight_rows(const HPolytope& p, const QVec& x);
// x is in p and the tight rows have rank dim.
bool is_vertex(const HPolytope& p, const QVec& x);

// Drops rows implied by the others (exact LP per row, first to last).
HPolytope remove_redundant(const HPolytope& p);

// Facet description of the convex hull of the given points, plus equality
// rows (as inequality pairs) when the points span a proper affine subspace.
HPolytope hull_of_points(int dim, const std::vector<QVec>& points);

// Extreme rays of the pointed cone { y : row . y >= 0 for every row },
// each scaled to a primitive integer vector. Throws Unbounded if the cone
// is not pointed.
std::vector<std::vector<Integer>> extreme_rays(int dim, std::vector<std::vector<Integer>> rows);

// Line-oriented text form; every number is written as num/den.
void write_hpolytope(std::ostream& out, const HPolytope& p);
void write_vrep(std::ostream& out, const VRep& v);
HPolytope read_hpolytope(std::istream& in);
VRep read_vrep(std::istream& in);
std::string to_text(const HPolytope& p);
std::string to_text(const VRep& v);

}  // namespace tperf
