#include "tperf/ropes.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "tperf/colouring.hpp"

namespace tperf {

namespace {

std::string name(const Graph& g, Vertex v) { return std::to_string(g.label(v)); }

std::string choice_text(const std::vector<int>& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
  return s + ")";
}

RopeVerdict reject(std::string clause, std::string detail) { return {false, std::move(clause), std::move(detail)}; }

RopeVerdict audit_rope(const Graph& g, const std::vector<Vertex>& anchors,
                       const std::vector<RopeSegment>& segs, bool closed) {
  const int r = static_cast<int>(segs.size());
  if (closed && (r < 2 || static_cast<int>(anchors.size()) != r))
    return reject("shape", "a rope needs r >= 2 anchors and one segment per anchor");
  if (!closed && (r < 1 || static_cast<int>(anchors.size()) != r + 1))
    return reject("shape", "a broken rope needs r >= 1 segments and r + 1 anchors");
  check_vertices(g, anchors);
  for (int i = 0; i < r; ++i) {
    const Vertex from = anchors[i];
    const Vertex to = anchors[closed ? (i + 1) % r : i + 1];
    for (int h = 1; h <= 2; ++h) {
      const auto& p = segs[i].choose(h);
      check_vertices(g, p);
      const std::string which = "path " + std::to_string(i + 1) + "," + std::to_string(h);
      if (p.size() < 2 || p.front() != from || p.back() != to)
        return reject("shape", which + " does not join its anchors");
      if (make_set(p).size() != p.size()) return reject("shape", which + " repeats a vertex");
      for (std::size_t j = 0; j + 1 < p.size(); ++j)
        if (!g.adjacent(p[j], p[j + 1]))
          return reject("shape", which + " uses the non-edge " + name(g, p[j]) + "-" + name(g, p[j + 1]));
      const int len = static_cast<int>(p.size()) - 1;
      if ((h == 1) != (len % 2 == 1))
        return reject("parity", which + " has length " + std::to_string(len));
    }
  }
  const std::string induced = closed ? "induced-cycle" : "induced-path";
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    std::vector<int> h(r);
    for (int i = 0; i < r; ++i) h[i] = (mask >> (r - 1 - i)) & 1 ? 2 : 1;
    std::vector<Vertex> walk;
    for (int i = 0; i < r; ++i) {
      const auto& p = segs[i].choose(h[i]);
      walk.insert(walk.end(), p.begin(), p.end() - 1);
    }
    if (!closed) walk.push_back(anchors.back());
    const Bitset in_walk = to_bitset(g, walk);
    if (in_walk.count() != walk.size())
      return reject(induced, "choice vector " + choice_text(h) + " repeats a vertex");
    for (std::size_t j = 0; j < walk.size(); ++j) {
      const bool end = !closed && (j == 0 || j + 1 == walk.size());
      const std::size_t want = end ? 1 : 2;
      if ((g.row(walk[j]) & in_walk).count() != want)
        return reject(induced, "choice vector " + choice_text(h) + " has a chord at vertex " + name(g, walk[j]));
    }
  }
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const auto dist = distances_from(g, anchors[i]);
    for (std::size_t j = i + 1; j < anchors.size(); ++j)
      if (dist[anchors[j]] >= 0 && dist[anchors[j]] < 5)
        return reject("distance", "anchors " + name(g, anchors[i]) + " and " + name(g, anchors[j]) +
                                      " are at distance " + std::to_string(dist[anchors[j]]));
  }
  return {};
}

// Vertices at distance exactly k (or at most k when `closed`) from v.
Bitset sphere(const Graph& g, Vertex v, int k, bool closed) {
  const auto dist = distances_from(g, v);
  Bitset out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    if (dist[u] >= 0 && (closed ? dist[u] <= k : dist[u] == k)) out.set(u);
  return out;
}

bool induced_path(const Graph& g, const std::vector<Vertex>& p) {
  const Bitset in = to_bitset(g, p);
  if (in.count() != p.size()) return false;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j + 1 < p.size() && !g.adjacent(p[j], p[j + 1])) return false;
    const std::size_t want = p.size() == 1 ? 0 : (j == 0 || j + 1 == p.size()) ? 1 : 2;
    if ((g.row(p[j]) & in).count() != want) return false;
  }
  return true;
}

int chi_of(const Graph& g, const VertexSet& s, const Caps& caps) { return chromatic_number_of(g, s, caps); }

// Components of g[s], largest chromatic number first, ties by lowest vertex.
std::vector<VertexSet> components_by_chi(const Graph& g, const VertexSet& s, const Caps& caps) {
  auto comps = components_within(g, s);
  if (comps.size() <= 1) return comps;
  std::vector<std::pair<int, VertexSet>> keyed;
  for (auto& c : comps) keyed.emplace_back(chi_of(g, c, caps), std::move(c));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<VertexSet> out;
  for (auto& [k, c] : keyed) out.push_back(std::move(c));
  return out;
}

long long as_count(const Rational& x) {
  Integer up = x.get_num() / x.get_den();
  if (up * x.get_den() != x.get_num()) up += 1;
  return up.get_si();
}

// Refuses strict mode when the threshold is out of reach or cannot be
// checked exactly.
void require_threshold(const Graph& g, const VertexSet& s, const Rational& threshold, const std::string& what,
                       const Caps& caps) {
  const long long need = as_count(threshold);
  if (static_cast<long long>(s.size()) < need)
    throw ThresholdUnmet(what + " needs chromatic number " + to_string(threshold) + " but has only " +
                         std::to_string(s.size()) + " vertices");
  if (static_cast<int>(s.size()) > caps.combinatorial)
    throw CapExceeded(what + ": chromatic number of " + std::to_string(s.size()) +
                      " vertices cannot be checked in strict mode");
  const int chi = chi_of(g, s, caps);
  if (chi < need)
    throw ThresholdUnmet(what + " has chromatic number " + std::to_string(chi) + ", below " + to_string(threshold));
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

struct Local {
  Graph graph;
  VertexSet members;
  Vertex global(Vertex v) const { return members[v]; }
};

Local restrict_to(const Graph& g, const VertexSet& s) { return {induced_subgraph(g, s), s}; }

StableGrading localise(const VertexSet& members, const std::vector<VertexSet>& classes) {
  StableGrading out;
  for (const auto& cls : classes) {
    VertexSet local;
    for (Vertex v : cls)
      local.push_back(static_cast<Vertex>(std::lower_bound(members.begin(), members.end(), v) - members.begin()));
    out.classes.push_back(make_set(local));
  }
  return out;
}

// earlier_witness on g[s] with the given grading, mapped back to g.
EarlierWitness graded_witness(const Graph& g, const VertexSet& s, const std::vector<VertexSet>& classes, int c,
                              bool strict) {
  Local loc = restrict_to(g, s);
  EarlierWitness w = earlier_witness_tf(loc.graph, localise(s, classes), c, strict);
  EarlierWitness out;
  for (Vertex v : w.x) out.x.push_back(loc.global(v));
  out.u = loc.global(w.u);
  out.v = loc.global(w.v);
  return out;
}

std::vector<Vertex> path_within(const Graph& g, Vertex from, Vertex to, const VertexSet& allowed) {
  Bitset mask = to_bitset(g, allowed);
  mask.set(from);
  mask.set(to);
  auto p = shortest_path(g, from, to, &mask);
  if (!p) throw RopeFailure("induction-step", "no path from " + name(g, from) + " to " + name(g, to));
  return *p;
}

void assign_parity(InductionStep& step, std::vector<Vertex> a, std::vector<Vertex> b) {
  if ((a.size() - 1) % 2 == 0) {
    step.even_path = std::move(a);
    step.odd_path = std::move(b);
  } else {
    step.odd_path = std::move(a);
    step.even_path = std::move(b);
  }
}

}  // namespace

CheckResult verify_grading(const Graph& g, const StableGrading& grading) {
  std::vector<int> seen(g.order(), 0);
  for (std::size_t i = 0; i < grading.classes.size(); ++i) {
    const auto& cls = grading.classes[i];
    for (Vertex v : cls) {
      if (!g.contains(v)) return fail("class " + std::to_string(i) + " names an unknown vertex");
      ++seen[v];
    }
    if (!is_stable(g, cls)) return fail("class " + std::to_string(i) + " is not stable");
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (seen[v] != 1) return fail("vertex " + name(g, v) + " lies in " + std::to_string(seen[v]) + " classes");
  return {};
}

std::vector<int> grade_of(const Graph& g, const StableGrading& grading) {
  std::vector<int> out(g.order(), -1);
  for (std::size_t i = 0; i < grading.classes.size(); ++i)
    for (Vertex v : grading.classes[i]) out[v] = static_cast<int>(i);
  return out;
}

RopeVerdict verify_rope(const Graph& g, const ArithmeticRope& rope) {
  return audit_rope(g, rope.anchors, rope.segments, true);
}

RopeVerdict verify_rope(const Graph& g, const BrokenRope& rope) {
  return audit_rope(g, rope.anchors, rope.segments, false);
}

GeneratedRope generate_rope(int r, int odd_len, int even_len) {
  if (r < 2) throw PreconditionError("rope needs r >= 2");
  if (odd_len < 1 || odd_len % 2 == 0) throw PreconditionError("odd length must be odd and positive");
  if (even_len < 2 || even_len % 2 == 1) throw PreconditionError("even length must be even and at least 2");
  int n = r;
  std::vector<std::pair<Vertex, Vertex>> edges;
  GeneratedRope out;
  for (int i = 0; i < r; ++i) out.rope.anchors.push_back(i);
  auto build = [&](Vertex from, Vertex to, int len) {
    std::vector<Vertex> p{from};
    for (int k = 1; k < len; ++k) p.push_back(n++);
    p.push_back(to);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) edges.emplace_back(p[k], p[k + 1]);
    return p;
  };
  for (int i = 0; i < r; ++i) {
    RopeSegment seg;
    seg.odd = build(i, (i + 1) % r, odd_len);
    seg.even = build(i, (i + 1) % r, even_len);
    out.rope.segments.push_back(std::move(seg));
  }
  out.graph = Graph(n, edges);
  if (auto v = verify_rope(out.graph, out.rope); !v)
    throw PreconditionError("generated rope fails its " + v.clause + " clause: " + v.detail);
  return out;
}

GeneratedRope generate_rope_shell(int r, int odd_len, int even_len, int depth) {
  if (depth < 1) throw PreconditionError("shell depth must be positive");
  GeneratedRope base = generate_rope(r, odd_len, even_len);
  const int m = base.graph.order();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : base.graph.edges()) edges.emplace_back(u + 1, v + 1);
  int n = m + 1;
  for (Vertex v = 0; v < m; ++v) {
    Vertex prev = 0;
    for (int k = 1; k < depth; ++k) {
      edges.emplace_back(prev, n);
      prev = n++;
    }
    edges.emplace_back(prev, v + 1);
  }
  GeneratedRope out;
  out.graph = Graph(n, edges);
  auto shift = [](std::vector<Vertex>& p) {
    for (auto& v : p) ++v;
  };
  out.rope = base.rope;
  shift(out.rope.anchors);
  for (auto& seg : out.rope.segments) {
    shift(seg.odd);
    shift(seg.even);
  }
  return out;
}

Graph comb_shell_fixture() {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto fresh = [&] { return n++; };
  auto link = [&](Vertex a, Vertex b) { edges.emplace_back(a, b); };
  auto tooth = [&](Vertex hub, Vertex target) {
    Vertex prev = hub;
    for (int k = 0; k < 4; ++k) {
      const Vertex t = fresh();
      link(prev, t);
      prev = t;
    }
    link(prev, target);
  };

  const Vertex root = fresh();
  // Inner comb: hub, then u'-q-tail with the tail a 5-vertex path.
  const Vertex hub2 = fresh();
  const Vertex u2 = fresh(), q3 = fresh();
  std::vector<Vertex> inner{u2, q3};
  link(u2, q3);
  Vertex prev = q3;
  for (int k = 0; k < 5; ++k) {
    const Vertex d = fresh();
    link(prev, d);
    inner.push_back(d);
    prev = d;
  }
  const int inner_start = hub2;
  for (Vertex x : inner) tooth(hub2, x);
  const int inner_end = n;

  // BFS order of the inner comb from its hub.
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [a, b] : edges)
    if (a >= inner_start && b >= inner_start) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  std::vector<Vertex> order;
  std::vector<bool> seen(n, false);
  std::queue<Vertex> queue;
  queue.push(hub2);
  seen[hub2] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    order.push_back(v);
    std::sort(adj[v].begin(), adj[v].end());
    for (Vertex u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        queue.push(u);
      }
  }

  const Vertex u1 = fresh(), q2 = fresh();
  link(u1, q2);
  link(q2, hub2);
  std::vector<Vertex> outer{u1, q2};
  outer.insert(outer.end(), order.begin(), order.end());
  const Vertex hub1 = fresh();
  for (Vertex x : outer) tooth(hub1, x);

  // Shell: every vertex of the combs gets a private path of length 5 to the
  // root, the outer hub first.
  std::vector<Vertex> body{hub1};
  for (Vertex v = 1; v < n; ++v)
    if (v != hub1) body.push_back(v);
  (void)inner_end;
  for (Vertex c : body) {
    Vertex p = root;
    for (int k = 0; k < 4; ++k) {
      const Vertex s = fresh();
      link(p, s);
      p = s;
    }
    link(p, c);
  }
  return Graph(n, edges);
}

EarlierWitness earlier_witness(const Graph& g, const StableGrading& grading, int c, bool check_precondition) {
  if (c < 1) throw PreconditionError("c must be at least 1");
  if (auto r = verify_grading(g, grading); !r) throw PreconditionError("not a stable grading: " + r.failure);
  if (check_precondition) {
    const int chi = chi_exact(g).chi;
    if (chi < c + 2)
      throw PreconditionError("chromatic number " + std::to_string(chi) + " is below c + 2 = " + std::to_string(c + 2));
  }
  const auto grade = grade_of(g, grading);
  // An earlier neighbour of w that itself has a neighbour earlier than w.
  auto earlier_edge = [&](Vertex w) -> std::optional<std::pair<Vertex, Vertex>> {
    for (Vertex x : g.neighbours(w)) {
      if (grade[x] >= grade[w]) continue;
      for (Vertex y : g.neighbours(x))
        if (grade[y] < grade[w]) return std::make_pair(y, x);
    }
    return std::nullopt;
  };
  VertexSet active;
  for (Vertex w = 0; w < g.order(); ++w)
    if (earlier_edge(w)) active.push_back(w);
  if (active.empty() || chromatic_number_of(g, active) < c) {
    if (check_precondition) throw VerificationFailure("left-active vertices have chromatic number below c");
    throw RopeFailure("grading-witness", "left-active vertices have chromatic number below " + std::to_string(c));
  }
  const VertexSet comp = components_by_chi(g, active, Caps{})[0];
  Vertex w = comp.front();
  for (Vertex v : comp)
    if (grade[v] < grade[w]) w = v;
  const auto [u, v] = *earlier_edge(w);
  return {comp, u, v};
}

EarlierWitness earlier_witness_tf(const Graph& g, const StableGrading& grading, int c, bool check_precondition) {
  if (c < 1) throw PreconditionError("c must be at least 1");
  if (check_precondition) {
    if (auto t = find_triangle(g))
      throw PreconditionError("graph has the triangle " + name(g, (*t)[0]) + " " + name(g, (*t)[1]) + " " +
                              name(g, (*t)[2]));
    const int chi = chi_exact(g).chi;
    if (chi < c + 3)
      throw PreconditionError("chromatic number " + std::to_string(chi) + " is below c + 3 = " + std::to_string(c + 3));
  }
  const EarlierWitness first = earlier_witness(g, grading, c + 1, false);
  const Bitset nb = g.row(first.v);
  VertexSet rest;
  for (Vertex x : first.x)
    if (!nb[x]) rest.push_back(x);
  if (rest.empty()) throw RopeFailure("grading-witness", "the witness set lies inside one neighbourhood");
  const VertexSet comp = components_by_chi(g, rest, Caps{})[0];
  const Bitset in_comp = to_bitset(g, comp);
  if ((g.row(first.u) & in_comp).any()) return {comp, first.v, first.u};
  for (Vertex w : first.x)
    if (nb[w] && (g.row(w) & in_comp).any()) {
      VertexSet x = comp;
      x.push_back(w);
      return {make_set(x), first.u, first.v};
    }
  throw RopeFailure("grading-witness", "no neighbour of the witness edge reaches the component");
}

CheckResult audit_earlier_witness(const Graph& g, const StableGrading& grading, int c, const EarlierWitness& w,
                                  bool triangle_free_form) {
  if (w.x.empty()) return fail("X is empty");
  check_vertices(g, w.x);
  check_vertex(g, w.u);
  check_vertex(g, w.v);
  if (!is_connected_within(g, w.x)) return fail("connected: g[X] is disconnected");
  if (const int chi = chromatic_number_of(g, w.x); chi < c)
    return fail("chromatic: chi(X) = " + std::to_string(chi) + " is below " + std::to_string(c));
  if (!g.adjacent(w.u, w.v)) return fail("edge: u and v are not adjacent");
  const auto grade = grade_of(g, grading);
  for (Vertex x : w.x)
    if (grade[w.u] >= grade[x] || grade[w.v] >= grade[x])
      return fail("earlier: u or v is not earlier than vertex " + name(g, x));
  const Bitset in_x = to_bitset(g, w.x);
  const bool u_hits = (g.row(w.u) & in_x).any();
  const bool v_hits = (g.row(w.v) & in_x).any();
  if (triangle_free_form) {
    if (u_hits) return fail("u-anticomplete: u has a neighbour in X");
    if (!v_hits) return fail("v-attached: v has no neighbour in X");
  } else if (!u_hits && !v_hits) {
    return fail("attached: neither u nor v has a neighbour in X");
  }
  return {};
}

Rational induction_threshold(int c) { return Rational(6 * c + 17); }

Rational broken_rope_threshold(int r, int c) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 6, static_cast<unsigned long>(r));
  return Rational(p * c) + Rational(17, 5) * Rational(p - 1);
}

Rational rope_finding_threshold(int r) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 6, static_cast<unsigned long>(r));
  return Rational(p * 6) + Rational(34, 5) * Rational(p - 1) - 1;
}

CheckResult audit_induction_step(const Graph& g, const VertexSet& b, const VertexSet& c, Vertex q, int target,
                                 const InductionStep& s) {
  const VertexSet bs = make_set(b), cs = make_set(c);
  if (!is_subset(make_set(s.b_next), bs)) return fail("shape: B' is not a subset of B");
  if (!is_subset(make_set(s.c_next), cs)) return fail("shape: C' is not a subset of C");
  const VertexSet cn = make_set(s.c_next), bn = make_set(s.b_next);
  if (!std::binary_search(cs.begin(), cs.end(), s.q_next) || std::binary_search(cn.begin(), cn.end(), s.q_next))
    return fail("shape: q' is not in C \\ C'");
  VertexSet allowed = set_minus(cs, cn);
  for (Vertex v : set_minus(bs, bn)) allowed.push_back(v);
  allowed.push_back(q);
  allowed = make_set(allowed);
  for (const auto* p : {&s.even_path, &s.odd_path}) {
    if (p->empty() || p->front() != q || p->back() != s.q_next) return fail("shape: a path does not join q and q'");
    if (!induced_path(g, *p)) return fail("shape: a path is not induced");
    for (Vertex v : *p)
      if (!std::binary_search(allowed.begin(), allowed.end(), v))
        return fail("shape: path vertex " + name(g, v) + " lies outside (C \\ C') + (B \\ B') + q");
  }

  VertexSet with_q = cn;
  with_q.push_back(s.q_next);
  if (!is_connected_within(g, make_set(with_q))) return fail("connected: g[C' + q'] is disconnected");
  if (const int chi = chromatic_number_of(g, cn); chi < target)
    return fail("chromatic: chi(C') = " + std::to_string(chi) + " is below " + std::to_string(target));
  if (!covers(g, bn, cn)) return fail("cover: B' does not cover C'");

  VertexSet on_paths = s.even_path;
  on_paths.insert(on_paths.end(), s.odd_path.begin(), s.odd_path.end());
  on_paths = make_set(on_paths);
  const Bitset near_q_next = sphere(g, s.q_next, 2, true);
  const Bitset in_bn = to_bitset(g, bn);
  for (Vertex v : on_paths)
    if (!near_q_next[v] && (g.row(v) & in_bn).any())
      return fail("B'-anticomplete: path vertex " + name(g, v) + " has a neighbour in B'");

  const Bitset two_from_q_next = sphere(g, s.q_next, 2, false);
  const Bitset three_from_q = sphere(g, q, 3, false);
  for (Vertex v : on_paths) {
    if (v == q || std::binary_search(cs.begin(), cs.end(), v)) continue;
    if (!std::binary_search(bs.begin(), bs.end(), v) || !two_from_q_next[v] || three_from_q[v])
      return fail("path-location: vertex " + name(g, v) + " is misplaced");
  }

  const Bitset in_cn = to_bitset(g, cn);
  for (Vertex v : on_paths)
    if (v != s.q_next && ((g.row(v) & in_cn).any() || in_cn[v]))
      return fail("C'-anticomplete: path vertex " + name(g, v) + " touches C'");

  const auto dist = distances_from(g, q);
  for (Vertex v : with_q)
    if (dist[v] >= 0 && dist[v] < 5)
      return fail("distance: vertex " + name(g, v) + " is at distance " + std::to_string(dist[v]) + " from q");

  if ((s.even_path.size() - 1) % 2 != 0 || (s.odd_path.size() - 1) % 2 != 1)
    return fail("parity: path lengths have the wrong parity");
  return {};
}

InductionStep rope_induction_step(const Graph& g, const VertexSet& b, const VertexSet& c, Vertex q,
                                  const Thresholds& th, const Caps& caps) {
  check_vertices(g, b);
  check_vertices(g, c);
  check_vertex(g, q);
  const VertexSet bs = make_set(b), cs = make_set(c);
  if (const int og = odd_girth(g); og < 11) throw PreconditionError("odd girth " + std::to_string(og) + " is below 11");
  if (std::binary_search(cs.begin(), cs.end(), q)) throw PreconditionError("q lies in C");
  if (!covers(g, bs, cs)) throw PreconditionError("B does not cover C");
  VertexSet with_q = cs;
  with_q.push_back(q);
  with_q = make_set(with_q);
  if (!is_connected_within(g, with_q)) throw PreconditionError("g[C + q] is disconnected");
  if (th.strict) require_threshold(g, cs, induction_threshold(th.c), "C", caps);

  const Bitset allowed = to_bitset(g, with_q);
  const auto level = distances_from(g, q, &allowed);
  int depth = 0;
  for (Vertex v : with_q) depth = std::max(depth, level[v]);
  const Bitset near_q = sphere(g, q, 4, true);
  const int chi_c = th.strict ? chi_of(g, cs, caps) : 0;

  std::string last = "C has no level beyond the fourth";
  for (int t = 4; t + 1 <= depth; ++t) {
    VertexSet m, mt, next;
    for (Vertex v : with_q) {
      if (level[v] < t) m.push_back(v);
      else if (level[v] == t) mt.push_back(v);
      else if (level[v] == t + 1 && !near_q[v]) next.push_back(v);
    }
    if (th.strict) {
      VertexSet whole;
      for (Vertex v : with_q)
        if (level[v] == t + 1) whole.push_back(v);
      if (chi_of(g, whole, caps) < (chi_c + 1) / 2) continue;
    }
    // B split by the parity of the distance to q through M.
    const Bitset in_m = to_bitset(g, m);
    const auto dist_m = distances_from(g, q, &in_m);
    VertexSet split[3];
    for (Vertex v : bs) {
      if (v == q) {
        split[2].push_back(v);
        continue;
      }
      int best = -1;
      for (Vertex u : g.neighbours(v))
        if (in_m[u] && dist_m[u] >= 0 && (best == -1 || dist_m[u] + 1 < best)) best = dist_m[u] + 1;
      split[best == -1 ? 0 : best % 2 == 1 ? 1 : 2].push_back(v);
    }
    std::vector<VertexSet> stars = components_by_chi(g, next, caps);
    if (th.strict && stars.size() > 1) stars.resize(1);
    for (const VertexSet& star : stars) {
      VertexSet part[3];
      for (int i = 0; i < 3; ++i) {
        const Bitset in_b = to_bitset(g, split[i]);
        for (Vertex v : star)
          if ((g.row(v) & in_b).any()) part[i].push_back(v);
      }
      std::vector<int> branches{0, 1, 2};
      if (th.strict) {
        branches.clear();
        if (chi_of(g, part[0], caps) >= th.c + 3) branches.push_back(0);
        else
          for (int h : {1, 2})
            if (chi_of(g, part[h], caps) >= th.c + 3) {
              branches.push_back(h);
              break;
            }
      }
      for (int h : branches) {
        if (part[h].empty()) continue;
        try {
          InductionStep step;
          step.branch = "C" + std::to_string(h);
          if (h == 0) {
            std::vector<VertexSet> classes;
            Bitset taken(g.order());
            for (Vertex mi : mt) {
              VertexSet cls;
              for (Vertex v : part[0])
                if (!taken[v] && g.adjacent(v, mi)) {
                  cls.push_back(v);
                  taken.set(v);
                }
              classes.push_back(std::move(cls));
            }
            const EarlierWitness w = graded_witness(g, part[0], classes, th.c, th.strict);
            step.c_next = w.x;
            step.q_next = w.v;
            VertexSet low = m;
            low.insert(low.end(), mt.begin(), mt.end());
            auto to_u = path_within(g, q, w.u, low);
            auto to_q = path_within(g, q, w.v, low);
            to_u.push_back(w.v);
            assign_parity(step, to_q, to_u);
            step.b_next = split[0];
          } else {
            std::vector<Vertex> order = m;
            std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return dist_m[x] < dist_m[y]; });
            std::vector<int> rank(g.order(), -1);
            for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
            const Bitset in_bh = to_bitset(g, split[h]);
            auto key = [&](Vertex v) {
              int best = -1;
              for (Vertex x : g.neighbours(v))
                if (in_bh[x])
                  for (Vertex y : g.neighbours(x))
                    if (rank[y] >= 0 && (best == -1 || rank[y] < best)) best = rank[y];
              return best;
            };
            std::vector<VertexSet> classes(order.size());
            for (Vertex v : part[h]) classes[key(v)].push_back(v);
            const EarlierWitness w = graded_witness(g, part[h], classes, th.c, th.strict);
            const int iu = key(w.u), iq = key(w.v);
            const int k = std::max(iu, iq);
            VertexSet kept, dropped;
            for (Vertex x : split[h]) {
              bool hit = false;
              for (Vertex y : g.neighbours(x))
                if (rank[y] >= 0 && rank[y] <= k) hit = true;
              (hit ? dropped : kept).push_back(x);
            }
            auto pick = [&](Vertex target, int i) {
              for (Vertex x : dropped)
                if (g.adjacent(x, order[i]) && g.adjacent(x, target)) return x;
              throw RopeFailure("induction-step", "no connector for vertex " + name(g, target));
            };
            const Vertex bu = pick(w.u, iu), bq = pick(w.v, iq);
            auto via_u = path_within(g, q, bu, m);
            via_u.push_back(w.u);
            via_u.push_back(w.v);
            auto via_q = path_within(g, q, bq, m);
            via_q.push_back(w.v);
            assign_parity(step, via_u, via_q);
            step.b_next = kept;
            step.c_next = w.x;
            step.q_next = w.v;
          }
          if (auto audit = audit_induction_step(g, bs, cs, q, th.c, step); !audit)
            throw RopeFailure("induction-step", "branch " + step.branch + " failed its audit: " + audit.failure);
          return step;
        } catch (const RopeFailure& e) {
          last = e.what();
        }
      }
    }
  }
  throw RopeFailure("induction-step", "no level, component or branch produced an audited step; last: " + last);
}

CheckResult audit_broken_rope(const Graph& g, const VertexSet& b, const VertexSet& c, int target,
                              const BrokenRopeResult& res) {
  const VertexSet bs = make_set(b), cs = make_set(c);
  const VertexSet bn = make_set(res.b_next), cn = make_set(res.c_next);
  const auto& rope = res.rope;
  const int r = rope.r();
  if (!is_subset(bn, bs) || !is_subset(cn, cs)) return fail("shape: B' or C' is not a subset");
  for (int i = 1; i <= r; ++i) {
    const Vertex qi = rope.anchors[i];
    if (!std::binary_search(cs.begin(), cs.end(), qi) || std::binary_search(cn.begin(), cn.end(), qi))
      return fail("shape: anchor " + name(g, qi) + " is not in C \\ C'");
  }
  if (auto v = verify_rope(g, rope); !v) return fail("rope: " + v.clause + ": " + v.detail);

  const Vertex end = rope.anchors.back();
  VertexSet with_end = cn;
  with_end.push_back(end);
  with_end = make_set(with_end);
  if (!is_connected_within(g, with_end)) return fail("connected: g[C' + end] is disconnected");
  if (const int chi = chromatic_number_of(g, cn); chi < target)
    return fail("chromatic: chi(C') = " + std::to_string(chi) + " is below " + std::to_string(target));
  if (!covers(g, bn, cn)) return fail("cover: B' does not cover C'");

  const Bitset in_bn = to_bitset(g, bn), in_cn = to_bitset(g, cn);
  VertexSet all_paths;
  for (int i = 0; i < r; ++i) {
    const Bitset near = sphere(g, rope.anchors[i + 1], 2, true);
    for (int h = 1; h <= 2; ++h)
      for (Vertex v : rope.segments[i].choose(h)) {
        all_paths.push_back(v);
        if (near[v]) continue;
        if ((g.row(v) & in_bn).any())
          return fail("B'-anticomplete: vertex " + name(g, v) + " of segment " + std::to_string(i + 1));
        if (v != rope.anchors[0] && !std::binary_search(cs.begin(), cs.end(), v))
          return fail("path-location: vertex " + name(g, v) + " of segment " + std::to_string(i + 1));
      }
  }
  for (Vertex v : make_set(all_paths))
    if (v != end && ((g.row(v) & in_cn).any() || in_cn[v]))
      return fail("C'-anticomplete: vertex " + name(g, v) + " touches C'");
  for (int i = 0; i < r; ++i) {
    const auto dist = distances_from(g, rope.anchors[i]);
    for (Vertex v : with_end)
      if (dist[v] >= 0 && dist[v] < 5)
        return fail("distance: anchor " + name(g, rope.anchors[i]) + " is within distance 4 of " + name(g, v));
  }
  return {};
}

BrokenRopeResult build_broken_rope(const Graph& g, const VertexSet& b, const VertexSet& c, Vertex q1, int r,
                                   const Thresholds& th, const Caps& caps) {
  if (r < 1) throw PreconditionError("broken rope needs r >= 1");
  check_vertex(g, q1);
  if (th.strict) require_threshold(g, make_set(c), broken_rope_threshold(r, th.c), "C", caps);
  BrokenRopeResult res;
  res.rope.anchors.push_back(q1);
  VertexSet cur_b = make_set(b), cur_c = make_set(c);
  Vertex q = q1;
  for (int i = 1; i <= r; ++i) {
    Thresholds inner = th;
    if (th.strict) inner.c = static_cast<int>(as_count(broken_rope_threshold(r - i, th.c)));
    InductionStep step;
    try {
      step = rope_induction_step(g, cur_b, cur_c, q, inner, caps);
    } catch (const RopeFailure& e) {
      throw RopeFailure("broken-rope", "step " + std::to_string(i) + ": " + e.what(), i);
    }
    res.rope.segments.push_back({step.odd_path, step.even_path});
    res.rope.anchors.push_back(step.q_next);
    cur_b = make_set(step.b_next);
    cur_c = make_set(step.c_next);
    q = step.q_next;
  }
  res.b_next = cur_b;
  res.c_next = cur_c;
  if (auto audit = audit_broken_rope(g, b, c, th.c, res); !audit)
    throw RopeFailure("broken-rope", "assembled rope failed its audit: " + audit.failure, r);
  return res;
}

namespace {

ArithmeticRope close_rope(const Graph& g, const BrokenRopeResult& br, const std::vector<int>& level, int s) {
  const auto& anchors = br.rope.anchors;
  const Vertex end = anchors.back();
  std::vector<std::vector<int>> dist;
  for (Vertex a : anchors) dist.push_back(distances_from(g, a));
  Vertex x = -1;
  for (Vertex v : br.c_next) {
    bool far = true;
    for (const auto& d : dist)
      if (d[v] >= 0 && d[v] < 5) far = false;
    if (far) {
      x = v;
      break;
    }
  }
  if (x < 0) throw RopeFailure("closing-path", "no vertex of C' is at distance 5 from every anchor");
  Vertex bx = -1;
  for (Vertex v : br.b_next)
    if (g.adjacent(v, x)) {
      bx = v;
      break;
    }
  if (bx < 0) throw RopeFailure("closing-path", "B' does not reach the far vertex");
  const auto p1 = path_within(g, end, bx, br.c_next);
  auto below = [&](Vertex v) {
    for (Vertex u : g.neighbours(v))
      if (level[u] == s - 1) return u;
    throw RopeFailure("closing-path", "vertex " + name(g, v) + " has no neighbour one level down");
  };
  const Vertex q1 = anchors.front();
  const Vertex a1 = below(q1), a2 = below(bx);
  VertexSet low;
  for (Vertex v = 0; v < g.order(); ++v)
    if (level[v] >= 0 && level[v] <= s - 2) low.push_back(v);
  const auto p2 = path_within(g, a2, a1, low);
  std::vector<Vertex> p = p1;
  p.insert(p.end(), p2.begin(), p2.end());
  p.push_back(q1);

  ArithmeticRope rope;
  const int r = br.rope.r();
  rope.anchors.assign(anchors.begin(), anchors.end() - 1);
  rope.segments.assign(br.rope.segments.begin(), br.rope.segments.end());
  auto& last = rope.segments[r - 1];
  last.odd.insert(last.odd.end(), p.begin() + 1, p.end());
  last.even.insert(last.even.end(), p.begin() + 1, p.end());
  if ((p.size() - 1) % 2 == 1) std::swap(last.odd, last.even);
  if (auto v = verify_rope(g, rope); !v)
    throw RopeFailure("closing-path", "closed rope fails its " + v.clause + " clause: " + v.detail);
  return rope;
}

}  // namespace

ArithmeticRope find_rope(const Graph& g, const VertexSet& x, int r, const Thresholds& th, const Caps& caps) {
  if (r < 2) throw PreconditionError("rope needs r >= 2");
  check_vertices(g, x);
  const VertexSet xs = make_set(x);
  if (th.strict) require_threshold(g, xs, rope_finding_threshold(r), "X", caps);
  if (const int og = odd_girth(g); og < 11) throw PreconditionError("odd girth " + std::to_string(og) + " is below 11");
  if (!th.strict && bipartition(induced_subgraph(g, xs)))
    throw RopeFailure("rope-finding", "X induces a bipartite graph, which holds no odd cycle");

  Thresholds inner = th;
  if (th.strict) inner.c = 3;
  std::string last = "X has too few levels";
  auto comps = components_by_chi(g, xs, caps);
  if (th.strict) comps.resize(1);
  for (const VertexSet& comp : comps) {
    const Bitset in_comp = to_bitset(g, comp);
    const auto level = distances_from(g, comp.front(), &in_comp);
    int depth = 0;
    for (Vertex v : comp) depth = std::max(depth, level[v]);
    for (int s = 4; s + 1 <= depth; ++s) {
      VertexSet ls, next;
      for (Vertex v : comp) {
        if (level[v] == s) ls.push_back(v);
        if (level[v] == s + 1) next.push_back(v);
      }
      auto cands = components_by_chi(g, next, caps);
      if (th.strict) cands.resize(1);
      for (const VertexSet& cc : cands) {
        const Bitset in_cc = to_bitset(g, cc);
        Vertex q1 = -1;
        for (Vertex v : ls)
          if ((g.row(v) & in_cc).any()) {
            q1 = v;
            break;
          }
        try {
          BrokenRopeResult br = build_broken_rope(g, ls, cc, q1, r, inner, caps);
          return close_rope(g, br, level, s);
        } catch (const RopeFailure& e) {
          last = e.what();
        }
      }
    }
  }
  throw RopeFailure("rope-finding", "no level produced a rope; last: " + last);
}

}  // namespace tperf
