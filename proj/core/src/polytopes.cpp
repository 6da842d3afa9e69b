#include "tperf/polytopes.hpp"

#include <algorithm>

#include "tperf/corpus.hpp"
#include "tperf/error.hpp"
#include "tperf/lp.hpp"
#include "tperf/tminors.hpp"

namespace tperf {

namespace {

void check_cap(const Graph& g, const Caps& caps) {
  if (g.order() > caps.polytope)
    throw CapExceeded("graph has " + std::to_string(g.order()) + " vertices, polytope cap is " +
                      std::to_string(caps.polytope));
}

Inequality sum_row(int n, const std::vector<Vertex>& support, Rational rhs, RowKind kind) {
  Inequality r;
  r.coeffs.assign(n, 0);
  for (Vertex v : support) r.coeffs[v] = 1;
  r.rhs = std::move(rhs);
  r.kind = kind;
  r.support = support;
  return r;
}

void add_nonnegativity(const Graph& g, HPolytope& p) {
  for (Vertex v = 0; v < g.order(); ++v) {
    Inequality r;
    r.coeffs.assign(g.order(), 0);
    r.coeffs[v] = -1;
    r.rhs = 0;
    r.kind = RowKind::Nonnegativity;
    r.support = {v};
    p.rows.push_back(std::move(r));
  }
}

void add_odd_cycles(const Graph& g, CycleMode mode, HPolytope& p) {
  auto cycles = mode == CycleMode::Chordless ? chordless_cycles(g, true) : simple_cycles(g, true);
  for (const auto& c : cycles)
    p.rows.push_back(sum_row(g.order(), c, Rational(static_cast<long>(c.size() - 1) / 2),
                             RowKind::OddCycle));
}

void add_cliques(const Graph& g, HPolytope& p) {
  for (const auto& k : maximal_cliques(g))
    if (!k.empty()) p.rows.push_back(sum_row(g.order(), k, 1, RowKind::Clique));
}

std::optional<ImperfectionWitness> fractional_vertex(const HPolytope& p, PolytopeKind kind) {
  for (const auto& v : enumerate_vertices(p).vertices) {
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integral(x); })) continue;
    ImperfectionWitness w;
    w.relaxation = kind;
    w.point = v;
    for (int i : tight_rows(p, v)) w.tight.push_back(p.rows[i]);
    return w;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(PolytopeKind kind) {
  switch (kind) {
    case PolytopeKind::SSP: return "SSP";
    case PolytopeKind::QSTAB: return "QSTAB";
    case PolytopeKind::TSTAB: return "TSTAB";
    case PolytopeKind::HSTAB: return "HSTAB";
  }
  return "?";
}

PolytopeKind parse_polytope_kind(const std::string& name) {
  for (auto k : {PolytopeKind::SSP, PolytopeKind::QSTAB, PolytopeKind::TSTAB, PolytopeKind::HSTAB})
    if (to_string(k) == name) return k;
  throw ParseError("unknown polytope kind '" + name + "'", 0);
}

HPolytope tstab(const Graph& g, CycleMode mode, const Caps& caps) {
  check_cap(g, caps);
  HPolytope p{g.order(), {}};
  add_nonnegativity(g, p);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) p.rows.push_back(sum_row(g.order(), {v}, 1, RowKind::Bound));
  for (auto [u, v] : g.edges()) p.rows.push_back(sum_row(g.order(), {u, v}, 1, RowKind::Edge));
  add_odd_cycles(g, mode, p);
  return p;
}

HPolytope qstab(const Graph& g, const Caps& caps) {
  check_cap(g, caps);
  HPolytope p{g.order(), {}};
  add_nonnegativity(g, p);
  add_cliques(g, p);
  return p;
}

HPolytope hstab(const Graph& g, CycleMode mode, const Caps& caps) {
  check_cap(g, caps);
  HPolytope p{g.order(), {}};
  add_nonnegativity(g, p);
  add_cliques(g, p);
  add_odd_cycles(g, mode, p);
  return p;
}

VRep ssp(const Graph& g, const Caps& caps) {
  check_cap(g, caps);
  VRep out{g.order(), {}};
  for (const auto& s : all_stable_sets(g)) {
    QVec x(g.order(), 0);
    for (Vertex v : s) x[v] = 1;
    out.vertices.push_back(std::move(x));
  }
  std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
  return out;
}

std::variant<HPolytope, VRep> build_polytope(const Graph& g, PolytopeKind kind, const Caps& caps) {
  switch (kind) {
    case PolytopeKind::SSP: return ssp(g, caps);
    case PolytopeKind::QSTAB: return qstab(g, caps);
    case PolytopeKind::TSTAB: return tstab(g, CycleMode::Chordless, caps);
    case PolytopeKind::HSTAB: return hstab(g, CycleMode::Chordless, caps);
  }
  throw PreconditionError("unknown polytope kind");
}

PerfectionResult is_t_perfect(const Graph& g, const Caps& caps) {
  auto w = fractional_vertex(tstab(g, CycleMode::Chordless, caps), PolytopeKind::TSTAB);
  return {!w.has_value(), std::move(w)};
}

PerfectionResult is_h_perfect(const Graph& g, const Caps& caps) {
  auto w = fractional_vertex(hstab(g, CycleMode::Chordless, caps), PolytopeKind::HSTAB);
  return {!w.has_value(), std::move(w)};
}

PerfectionResult is_hbar_perfect(const Graph& g, const Caps& caps) {
  auto r = is_h_perfect(complement(g), caps);
  if (r.witness) r.witness->complemented = true;
  return r;
}

CheckResult verify_witness(const Graph& g, const ImperfectionWitness& w, const Caps& caps) {
  const Graph host = w.complemented ? complement(g) : g;
  HPolytope p;
  switch (w.relaxation) {
    case PolytopeKind::TSTAB: p = tstab(host, CycleMode::Chordless, caps); break;
    case PolytopeKind::HSTAB: p = hstab(host, CycleMode::Chordless, caps); break;
    case PolytopeKind::QSTAB: p = qstab(host, caps); break;
    case PolytopeKind::SSP: return {false, "SSP has no fractional vertices"};
  }
  if (static_cast<int>(w.point.size()) != host.order()) return {false, "point dimension mismatch"};
  if (!contains(p, w.point)) return {false, "point violates an inequality"};
  if (!is_vertex(p, w.point)) return {false, "tight inequalities do not have full rank"};
  if (std::all_of(w.point.begin(), w.point.end(), [](const Rational& x) { return is_integral(x); }))
    return {false, "point is integral"};
  auto tight = tight_rows(p, w.point);
  if (tight.size() != w.tight.size()) return {false, "tight row list is incomplete"};
  for (std::size_t i = 0; i < tight.size(); ++i) {
    const auto& a = p.rows[tight[i]];
    const auto& b = w.tight[i];
    if (a.coeffs != b.coeffs || a.rhs != b.rhs || a.kind != b.kind || a.support != b.support)
      return {false, "tight row " + std::to_string(i) + " does not match the relaxation"};
  }
  if (in_convex_hull(ssp(host, caps).vertices, w.point))
    return {false, "point lies in the stable set polytope"};
  return {};
}

bool check_tminor_closure(const Graph& g, const TMinorTrace& trace, const Caps& caps) {
  auto replay = verify_trace(g, trace);
  if (!replay) throw PreconditionError("invalid trace: " + replay.failure);
  if (!is_t_perfect(g, caps).holds) return true;
  return is_t_perfect(trace.result, caps).holds;
}

}  // namespace tperf
