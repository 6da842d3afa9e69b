#pragma once

// Test-side oracles and generators. The oracles deliberately avoid the
// library's own algorithms: plain backtracking, walk counting and subset
// enumeration.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tperf/colouring.hpp"
#include "tperf/corpus.hpp"
#include "tperf/geometry.hpp"
#include "tperf/graph.hpp"
#include "tperf/ropes.hpp"

namespace oracle {

using tperf::Graph;
using tperf::QVec;
using tperf::Rational;
using tperf::Vertex;
using Rng = std::mt19937_64;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

inline bool colourable(const std::vector<std::vector<bool>>& a, int k, std::vector<int>& col, int v) {
  const int n = static_cast<int>(a.size());
  if (v == n) return true;
  int top = 0;
  for (int u = 0; u < v; ++u) top = std::max(top, col[u] + 1);
  for (int c = 0; c < k && c <= top; ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (a[v][u] && col[u] == c) ok = false;
    if (!ok) continue;
    col[v] = c;
    if (colourable(a, k, col, v + 1)) return true;
  }
  col[v] = -1;
  return false;
}

// Smallest k admitting a proper k-colouring, by plain backtracking.
inline int chromatic_number(const Graph& g) {
  const auto a = matrix(g);
  for (int k = 0;; ++k) {
    std::vector<int> col(g.order(), -1);
    if (g.order() == 0 || (k > 0 && colourable(a, k, col, 0))) return k;
  }
}

// Shortest odd closed walk length (equals the odd girth), by counting walks;
// -1 when bipartite.
inline int odd_girth(const Graph& g) {
  const int n = g.order();
  const auto a = matrix(g);
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) reach[v][v] = true;
  for (int len = 1; len <= 2 * n + 1; ++len) {
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (int s = 0; s < n; ++s)
      for (int u = 0; u < n; ++u)
        if (reach[s][u])
          for (int w = 0; w < n; ++w)
            if (a[u][w]) next[s][w] = true;
    reach = std::move(next);
    if (len % 2 == 1)
      for (int v = 0; v < n; ++v)
        if (reach[v][v]) return len;
  }
  return -1;
}

inline bool is_stable(const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

inline bool connected_within(const Graph& g, const std::vector<Vertex>& s) {
  if (s.empty()) return true;
  std::vector<bool> in(g.order(), false), seen(g.order(), false);
  for (Vertex v : s) in[v] = true;
  std::vector<Vertex> stack{s[0]};
  seen[s[0]] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex u = 0; u < g.order(); ++u)
      if (in[u] && !seen[u] && g.adjacent(u, v)) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  return count == s.size();
}

inline int chromatic_number_of(const Graph& g, const std::vector<Vertex>& s) {
  return chromatic_number(tperf::induced_subgraph(g, s));
}

// Solves the square system exactly; false if singular.
inline bool solve(std::vector<QVec> a, QVec b, QVec& x) {
  const int n = static_cast<int>(a.size());
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (int k = 0; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

// Vertices of a bounded polytope by trying every d-subset of rows.
inline std::vector<QVec> polytope_vertices(const tperf::HPolytope& p) {
  const int d = p.dim, m = static_cast<int>(p.rows.size());
  std::vector<QVec> out;
  std::vector<int> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  if (d > m) return out;
  while (true) {
    std::vector<QVec> a;
    QVec b;
    for (int i : pick) {
      a.push_back(p.rows[i].coeffs);
      b.push_back(p.rows[i].rhs);
    }
    QVec x;
    if (solve(a, b, x)) {
      bool feasible = true;
      for (const auto& row : p.rows)
        if (tperf::dot(row.coeffs, x) > row.rhs) feasible = false;
      if (feasible) out.push_back(x);
    }
    int i = d - 1;
    while (i >= 0 && pick[i] == m - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(), tperf::lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Same graph with vertex i moved to perm[i]; labels follow the new indices.
inline Graph shuffled(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

inline Graph add_edge(const Graph& g, Vertex a, Vertex b) {
  auto edges = g.edges();
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return Graph(std::vector<int>(g.labels().begin(), g.labels().end()), edges);
}

inline Graph remove_edge(const Graph& g, Vertex a, Vertex b) {
  auto edges = g.edges();
  edges.erase(std::remove(edges.begin(), edges.end(), std::make_pair(std::min(a, b), std::max(a, b))), edges.end());
  return Graph(std::vector<int>(g.labels().begin(), g.labels().end()), edges);
}

// Random ordered partition into stable classes, with the class order
// shuffled.
inline tperf::StableGrading random_grading(const Graph& g, Rng& rng) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<tperf::VertexSet> classes;
  for (Vertex v : order) {
    std::vector<std::size_t> fits;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (std::none_of(classes[i].begin(), classes[i].end(), [&](Vertex u) { return g.adjacent(u, v); }))
        fits.push_back(i);
    std::uniform_int_distribution<std::size_t> pick(0, fits.size());
    const std::size_t choice = pick(rng);
    if (choice == fits.size()) classes.push_back({v});
    else classes[fits[choice]].push_back(v);
  }
  std::shuffle(classes.begin(), classes.end(), rng);
  for (auto& c : classes) std::sort(c.begin(), c.end());
  return {classes};
}

// Random connected graph with odd girth at least `min_odd_girth`: a random
// tree plus random edges that keep the bound.
inline Graph random_high_odd_girth(Rng& rng, int n, int extra, int min_odd_girth) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  Graph g(n, edges);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < extra * 4 && static_cast<int>(g.size()) < n - 1 + extra; ++k) {
    const Vertex a = pick(rng), b = pick(rng);
    if (a == b || g.adjacent(a, b)) continue;
    Graph trial = add_edge(g, a, b);
    const int og = tperf::odd_girth(trial);
    if (og == tperf::kInfinity || og >= min_odd_girth) g = trial;
  }
  return g;
}

// An odd cycle on k vertices (0..k-1) plus a hub k adjacent to three rim
// vertices cutting the cycle into odd arcs, and to random further rim
// vertices. Returns the graph with its rim order and hub.
struct HubInstance {
  Graph graph;
  std::vector<Vertex> cycle;
  Vertex hub;
};

inline HubInstance random_hub_instance(Rng& rng, int max_cycle = 15) {
  std::uniform_int_distribution<int> half(1, (max_cycle - 1) / 2);
  const int k = 2 * half(rng) + 1;
  int l1, l2, l3;
  do {
    l1 = 2 * std::uniform_int_distribution<int>(0, (k - 1) / 2)(rng) + 1;
    l2 = 2 * std::uniform_int_distribution<int>(0, (k - 1) / 2)(rng) + 1;
    l3 = k - l1 - l2;
  } while (l3 < 1);
  const int offset = std::uniform_int_distribution<int>(0, k - 1)(rng);
  std::vector<bool> nb(k, false);
  nb[offset % k] = nb[(offset + l1) % k] = nb[(offset + l1 + l2) % k] = true;
  std::bernoulli_distribution extra(0.25);
  for (int i = 0; i < k; ++i)
    if (extra(rng)) nb[i] = true;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(std::min(i, (i + 1) % k), std::max(i, (i + 1) % k));
  for (int i = 0; i < k; ++i)
    if (nb[i]) edges.emplace_back(i, k);
  std::vector<Vertex> perm(k + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<Vertex, Vertex>> moved;
  for (auto [u, v] : edges) moved.emplace_back(perm[u], perm[v]);
  HubInstance out{Graph(k + 1, moved), {}, perm[k]};
  for (int i = 0; i < k; ++i) out.cycle.push_back(perm[i]);
  return out;
}

// Vertices lying together on at least one choice-vector cycle of the rope.
inline bool share_a_cycle(const tperf::ArithmeticRope& rope, Vertex a, Vertex b) {
  const int r = rope.r();
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    bool ha = false, hb = false;
    for (int i = 0; i < r; ++i)
      for (Vertex v : rope.segments[i].choose((mask >> i) & 1 ? 2 : 1)) {
        ha |= v == a;
        hb |= v == b;
      }
    if (ha && hb) return true;
  }
  return false;
}

}  // namespace oracle
