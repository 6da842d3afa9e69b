#include "tperf/colouring.hpp"

#include <algorithm>
#include <numeric>

#include "tperf/error.hpp"
#include "tperf/lp.hpp"

namespace tperf {

namespace {

void require_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap)
    throw CapExceeded(std::string(what) + " is capped at " + std::to_string(cap) + " vertices, got " +
                      std::to_string(g.order()));
}

// Exact colouring of a connected graph by DSATUR branch and bound.
class Dsatur {
 public:
  explicit Dsatur(const Graph& g) : g_(g), n_(g.order()), colour_(n_, -1), seen_(n_, std::vector<int>(n_ + 1, 0)),
                                    sat_(n_, 0) {}

  std::vector<int> solve(int lower) {
    best_ = greedy();
    best_count_ = count_of(best_);
    lower_ = lower;
    if (best_count_ > lower_) search(0, 0);
    return best_;
  }

 private:
  static int count_of(const std::vector<int>& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

  Vertex pick() const {
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && g_.degree(v) > g_.degree(best))) best = v;
    }
    return best;
  }

  void assign(Vertex v, int c) {
    colour_[v] = c;
    for (Vertex u : g_.neighbours(v))
      if (seen_[u][c]++ == 0) ++sat_[u];
  }

  void unassign(Vertex v) {
    const int c = colour_[v];
    colour_[v] = -1;
    for (Vertex u : g_.neighbours(v))
      if (--seen_[u][c] == 0) --sat_[u];
  }

  std::vector<int> greedy() {
    for (int k = 0; k < n_; ++k) {
      const Vertex v = pick();
      int c = 0;
      while (seen_[v][c]) ++c;
      assign(v, c);
    }
    std::vector<int> out = colour_;
    for (Vertex v = 0; v < n_; ++v) unassign(v);
    return out;
  }

  void search(int coloured, int used) {
    if (best_count_ <= lower_) return;
    if (coloured == n_) {
      best_ = colour_;
      best_count_ = used;
      return;
    }
    const Vertex v = pick();
    for (int c = 0; c <= used && c < best_count_ - 1; ++c) {
      if (seen_[v][c]) continue;
      assign(v, c);
      search(coloured + 1, std::max(used, c + 1));
      unassign(v);
      if (best_count_ <= lower_) return;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<std::vector<int>> seen_;
  std::vector<int> sat_;
  std::vector<int> best_;
  int best_count_ = 0;
  int lower_ = 0;
};

std::vector<int> colour_component(const Graph& h) {
  if (h.order() == 0) return {};
  if (h.size() == 0) return std::vector<int>(h.order(), 0);
  if (auto bp = bipartition(h)) {
    std::vector<int> out(h.order(), 0);
    for (Vertex v : bp->second) out[v] = 1;
    return out;
  }
  return Dsatur(h).solve(std::max(clique_number(h), 3));
}

std::string cycle_text(const Graph& g) {
  std::string s;
  if (auto c = shortest_odd_cycle(g))
    for (Vertex v : *c) s += (s.empty() ? "" : " ") + std::to_string(g.label(v));
  return s;
}

std::vector<int> cycle_labels(const Graph& g) {
  std::vector<int> out;
  if (auto c = shortest_odd_cycle(g))
    for (Vertex v : *c) out.push_back(g.label(v));
  return out;
}

VertexSet complement_of(const Graph& g, const VertexSet& s) {
  const Bitset in = to_bitset(g, s);
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

// Support sets of an optimal fractional colouring, largest first, ties
// lexicographic.
std::vector<VertexSet> support_sets(const Graph& g, const Caps& caps) {
  std::vector<VertexSet> sets;
  for (const auto& w : chi_fractional(g, caps).colouring.sets) sets.push_back(w.set);
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  return sets;
}

}  // namespace

CheckResult verify_colouring(const Graph& g, const Colouring& c) {
  if (static_cast<int>(c.colour.size()) != g.order()) return fail("colouring has the wrong length");
  for (Vertex v = 0; v < g.order(); ++v)
    if (c.colour[v] < 0 || c.colour[v] >= c.count)
      return fail("vertex " + std::to_string(g.label(v)) + " has colour outside 0.." + std::to_string(c.count - 1));
  for (auto [u, v] : g.edges())
    if (c.colour[u] == c.colour[v])
      return fail("edge " + std::to_string(g.label(u)) + "-" + std::to_string(g.label(v)) + " is monochromatic");
  return {};
}

CheckResult verify_fractional_colouring(const Graph& g, const FractionalColouring& f) {
  std::vector<Rational> cover(g.order(), 0);
  Rational total = 0;
  for (const auto& w : f.sets) {
    check_vertices(g, w.set);
    if (!is_stable(g, w.set)) return fail("a weighted set is not stable");
    if (w.weight < 0) return fail("a weight is negative");
    for (Vertex v : w.set) cover[v] += w.weight;
    total += w.weight;
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (cover[v] < 1) return fail("vertex " + std::to_string(g.label(v)) + " is covered " + to_string(cover[v]));
  if (total != f.total) return fail("stated total " + to_string(f.total) + " differs from " + to_string(total));
  return {};
}

ChiResult chi_exact(const Graph& g, const Caps& caps) {
  require_cap(g, caps.combinatorial, "exact colouring");
  ChiResult out;
  out.colouring.colour.assign(g.order(), 0);
  for (const VertexSet& comp : connected_components(g)) {
    const auto local = colour_component(induced_subgraph(g, comp));
    for (std::size_t i = 0; i < comp.size(); ++i) out.colouring.colour[comp[i]] = local[i];
    const int k = local.empty() ? 0 : *std::max_element(local.begin(), local.end()) + 1;
    out.chi = std::max(out.chi, k);
  }
  out.colouring.count = out.chi;
  return out;
}

int chromatic_number_of(const Graph& g, const VertexSet& s, const Caps& caps) {
  if (s.empty()) return 0;
  return chi_exact(induced_subgraph(g, s), caps).chi;
}

FractionalResult chi_fractional(const Graph& g, const Caps& caps) {
  require_cap(g, caps.fractional, "fractional colouring");
  FractionalResult out;
  if (g.order() == 0) return out;
  const auto stables = maximal_stable_sets(g);
  // Fractional clique LP: max sum y subject to y(S) <= 1 for every maximal
  // stable set S. Its duals are the colouring weights.
  std::vector<QVec> rows;
  for (const auto& s : stables) {
    QVec row(g.order(), 0);
    for (Vertex v : s) row[v] = 1;
    rows.push_back(std::move(row));
  }
  const LpResult lp = simplex_max(rows, QVec(stables.size(), 1), QVec(g.order(), 1));
  QVec dual = lp.dual;
  Rational sum = 0;
  for (const auto& d : dual) sum += d;
  if (sum < 0)
    for (auto& d : dual) d = -d;
  out.value = lp.value;
  for (std::size_t i = 0; i < stables.size(); ++i)
    if (dual[i] != 0) out.colouring.sets.push_back({stables[i], dual[i]});
  out.colouring.total = out.value;
  if (auto r = verify_fractional_colouring(g, out.colouring); !r)
    throw VerificationFailure("fractional colouring from the LP duals: " + r.failure);
  return out;
}

FractionalBoundReport fractional_bound_check(const Graph& g, int ell, const Caps& caps) {
  if (ell < 1) throw PreconditionError("ell must be at least 1");
  const int og = odd_girth(g);
  if (og < 2 * ell + 1)
    throw PreconditionError("odd girth " + std::to_string(og) + " is below " + std::to_string(2 * ell + 1));
  if (g.order() <= caps.polytope && !is_t_perfect(g, caps).holds) throw PreconditionError("graph is not t-perfect");
  FractionalBoundReport out;
  out.chi_star = chi_fractional(g, caps).value;
  out.bound = Rational(2) + Rational(1, ell);
  out.has_short_cycle = og == 2 * ell + 1;
  out.passed = out.chi_star <= out.bound && ((out.chi_star == out.bound) == out.has_short_cycle);
  return out;
}

VertexSet reduce_odd_girth(const Graph& g, int ell, const Caps& caps) {
  if (ell < 1) throw PreconditionError("ell must be at least 1");
  const int og = odd_girth(g);
  if (og < 2 * ell + 1)
    throw PreconditionError("odd girth " + std::to_string(og) + " is below " + std::to_string(2 * ell + 1));
  std::vector<VertexSet> candidates;
  if (og > 2 * ell + 1 || g.order() > caps.fractional) candidates.push_back(maximum_stable_set(g));
  else candidates = support_sets(g, caps);

  std::string why = "no candidate stable set";
  std::vector<int> evidence;
  for (const VertexSet& s : candidates) {
    if (!is_stable(g, s)) {
      why = "candidate set is not stable";
      continue;
    }
    if (static_cast<long long>(2 * ell + 1) * static_cast<long long>(s.size()) <
        static_cast<long long>(ell) * g.order()) {
      why = "stable set of size " + std::to_string(s.size()) + " is below ell n / (2 ell + 1)";
      continue;
    }
    const Graph rest = induced_subgraph(g, complement_of(g, s));
    if (odd_girth(rest) < 2 * ell + 3) {
      why = "remainder keeps the odd cycle " + cycle_text(rest);
      evidence = cycle_labels(rest);
      continue;
    }
    return s;
  }
  throw VerificationFailure("odd girth reduction: " + why, evidence);
}

VertexSet reduce_clique(const Graph& g, const Caps& caps) {
  const int omega = clique_number(g);
  if (omega == 0) throw PreconditionError("graph has no vertices");
  for (const VertexSet& s : support_sets(g, caps))
    if (clique_number(induced_subgraph(g, complement_of(g, s))) < omega) return s;
  throw VerificationFailure("no stable set of an optimal fractional colouring meets every maximum clique");
}

Certificate certify(const Graph& g, const CertifyParams& params) {
  const Caps& caps = params.caps;
  require_cap(g, caps.combinatorial, "certify");
  if (g.order() <= caps.polytope) {
    auto tp = is_t_perfect(g, caps);
    if (!tp.holds) return *tp.witness;
  }
  VertexSet rest(g.order());
  std::iota(rest.begin(), rest.end(), 0);
  std::vector<VertexSet> classes;
  try {
    for (int ell = 1; ell <= params.rounds; ++ell) {
      const Graph h = induced_subgraph(g, rest);
      if (bipartition(h)) break;
      if (odd_girth(h) > 2 * ell + 1) continue;
      VertexSet s;
      for (Vertex v : reduce_odd_girth(h, ell, caps)) s.push_back(rest[v]);
      classes.push_back(s);
      const Bitset drop = to_bitset(g, s);
      VertexSet next;
      for (Vertex v : rest)
        if (!drop[v]) next.push_back(v);
      rest = std::move(next);
    }
  } catch (const VerificationFailure& e) {
    if (g.order() > caps.polytope)
      if (auto w = find_odd_wheel_tminor(g, params.wheel_budget, caps)) return *w;
    throw;
  }
  const ChiResult tail = chi_exact(induced_subgraph(g, rest), caps);
  ColouringCertificate cert;
  cert.reduction_classes = classes;
  cert.colouring.colour.assign(g.order(), 0);
  const int k = static_cast<int>(classes.size());
  for (int i = 0; i < k; ++i)
    for (Vertex v : classes[i]) cert.colouring.colour[v] = i;
  for (std::size_t i = 0; i < rest.size(); ++i) cert.colouring.colour[rest[i]] = k + tail.colouring.colour[i];
  cert.colouring.count = k + tail.chi;
  if (tail.chi > params.technical_bound || cert.colouring.count > params.total_bound)
    throw VerificationFailure("colouring uses " + std::to_string(cert.colouring.count) + " colours, above the bound");
  return cert;
}

CheckResult verify_certificate(const Graph& g, const Certificate& cert, const Caps& caps) {
  if (const auto* c = std::get_if<ColouringCertificate>(&cert)) {
    if (auto r = verify_colouring(g, c->colouring); !r) return r;
    Bitset used(g.order());
    for (std::size_t i = 0; i < c->reduction_classes.size(); ++i) {
      const auto& cls = c->reduction_classes[i];
      check_vertices(g, cls);
      if (!is_stable(g, cls)) return fail("reduction class " + std::to_string(i) + " is not stable");
      for (Vertex v : cls) {
        if (used[v]) return fail("reduction classes overlap");
        used.set(v);
        if (c->colouring.colour[v] != static_cast<int>(i))
          return fail("reduction class " + std::to_string(i) + " is not colour " + std::to_string(i));
      }
    }
    return {};
  }
  if (const auto* w = std::get_if<ImperfectionWitness>(&cert)) return verify_witness(g, *w, caps);
  return verify_wheel_witness(g, std::get<OddWheelWitness>(cert));
}

Colouring hbar_colour(const Graph& g, const Caps& caps) {
  Colouring out;
  out.colour.assign(g.order(), 0);
  if (g.order() == 0) return out;
  Vertex v = 0;
  for (Vertex u = 1; u < g.order(); ++u)
    if (g.degree(u) > g.degree(v)) v = u;
  VertexSet nb(g.neighbours(v).begin(), g.neighbours(v).end());
  const VertexSet far = complement_of(g, nb);
  const ChiResult head = chi_exact(induced_subgraph(g, far), caps);
  for (std::size_t i = 0; i < far.size(); ++i) out.colour[far[i]] = head.colouring.colour[i];
  out.count = head.chi;
  if (!nb.empty()) {
    const Colouring inner = hbar_colour(induced_subgraph(g, nb), caps);
    for (std::size_t i = 0; i < nb.size(); ++i) out.colour[nb[i]] = out.count + inner.colour[i];
    out.count += inner.count;
  }
  return out;
}

}  // namespace tperf
