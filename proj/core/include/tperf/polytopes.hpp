#pragma once

#include <optional>
#include <string>
#include <variant>

#include "tperf/check.hpp"
#include "tperf/geometry.hpp"
#include "tperf/graph.hpp"

namespace tperf {

struct TMinorTrace;

enum class PolytopeKind { SSP, QSTAB, TSTAB, HSTAB };
std::string to_string(PolytopeKind kind);
PolytopeKind parse_polytope_kind(const std::string& name);

// Which odd cycles contribute inequalities.
enum class CycleMode { Chordless, All };

// Row order: nonnegativity by vertex, then edges / cliques, then odd
// cycles, each family in lexicographic order. Isolated vertices get an
// explicit x_v <= 1 row in TSTAB so the system stays bounded.
HPolytope tstab(const Graph& g, CycleMode mode = CycleMode::Chordless, const Caps& caps = {});
HPolytope qstab(const Graph& g, const Caps& caps = {});
HPolytope hstab(const Graph& g, CycleMode mode = CycleMode::Chordless, const Caps& caps = {});
// Incidence vectors of all stable sets, lexicographically ordered.
VRep ssp(const Graph& g, const Caps& caps = {});
std::variant<HPolytope, VRep> build_polytope(const Graph& g, PolytopeKind kind, const Caps& caps = {});

// A fractional vertex of a relaxation. `complemented` marks witnesses found
// on the complement of the graph under test (the h-bar oracle).
struct ImperfectionWitness {
  PolytopeKind relaxation = PolytopeKind::TSTAB;
  bool complemented = false;
  QVec point;
  std::vector<Inequality> tight;
};

struct PerfectionResult {
  bool holds = true;
  std::optional<ImperfectionWitness> witness;
};

// Full vertex enumeration of the relaxation. When some vertex is
// fractional, the lexicographically least one is returned as the witness.
PerfectionResult is_t_perfect(const Graph& g, const Caps& caps = {});
PerfectionResult is_h_perfect(const Graph& g, const Caps& caps = {});
PerfectionResult is_hbar_perfect(const Graph& g, const Caps& caps = {});

// Independent audit: the point is a vertex of the rebuilt relaxation, has a
// fractional coordinate, is not in the stable set polytope, and the listed
// tight rows are exactly the tight rows of the relaxation.
CheckResult verify_witness(const Graph& g, const ImperfectionWitness& w, const Caps& caps = {});

// False only if g is t-perfect while the trace result is not.
bool check_tminor_closure(const Graph& g, const TMinorTrace& trace, const Caps& caps = {});

}  // namespace tperf
