#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tperf/check.hpp"
#include "tperf/graph.hpp"
#include "tperf/polytopes.hpp"
#include "tperf/rational.hpp"
#include "tperf/tminors.hpp"

namespace tperf {

struct Colouring {
  std::vector<int> colour;  // by vertex index, contiguous from 0
  int count = 0;
};

CheckResult verify_colouring(const Graph& g, const Colouring& c);

struct WeightedStableSet {
  VertexSet set;
  Rational weight;
};

struct FractionalColouring {
  std::vector<WeightedStableSet> sets;
  Rational total;
};

CheckResult verify_fractional_colouring(const Graph& g, const FractionalColouring& f);

struct ChiResult {
  int chi = 0;
  Colouring colouring;
};

// DSATUR branch and bound, component by component.
ChiResult chi_exact(const Graph& g, const Caps& caps = {});
// Chromatic number of g[s].
int chromatic_number_of(const Graph& g, const VertexSet& s, const Caps& caps = {});

struct FractionalResult {
  Rational value;
  FractionalColouring colouring;
};

// Solves the fractional clique LP over all maximal stable sets and reads the
// colouring off its duals.
FractionalResult chi_fractional(const Graph& g, const Caps& caps = {});

struct FractionalBoundReport {
  Rational chi_star;
  Rational bound;             // 2 + 1/ell
  bool has_short_cycle = false;  // an odd cycle of length exactly 2 ell + 1
  bool passed = false;        // chi* <= bound, with equality iff has_short_cycle
};

// Throws PreconditionError if g is not t-perfect or has odd girth below
// 2 ell + 1.
FractionalBoundReport fractional_bound_check(const Graph& g, int ell, const Caps& caps = {});

// A stable set whose removal raises the odd girth to at least 2 ell + 3 and
// which has at least ell |V| / (2 ell + 1) vertices. Postconditions are always
// checked; VerificationFailure carries a short odd cycle of the remainder.
VertexSet reduce_odd_girth(const Graph& g, int ell, const Caps& caps = {});

// A stable set meeting every maximum clique. Throws VerificationFailure if
// no stable set from an optimal fractional colouring does.
VertexSet reduce_clique(const Graph& g, const Caps& caps = {});

struct CertifyParams {
  int rounds = 4;
  long long technical_bound = 199049;
  long long total_bound = 199053;
  SearchBudget wheel_budget;
  Caps caps;
};

// Colour classes extracted by the reduction rounds, then the classes of the
// remainder.
struct ColouringCertificate {
  Colouring colouring;
  std::vector<VertexSet> reduction_classes;
};

using Certificate = std::variant<ColouringCertificate, ImperfectionWitness, OddWheelWitness>;

Certificate certify(const Graph& g, const CertifyParams& params = {});
CheckResult verify_certificate(const Graph& g, const Certificate& cert, const Caps& caps = {});

// Colours g - N(v) exactly and recurses on g[N(v)] with fresh colours, where
// v has maximum degree.
Colouring hbar_colour(const Graph& g, const Caps& caps = {});

}  // namespace tperf
