#include "tperf/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "tperf/error.hpp"

namespace tperf {

Graph::Graph(int n) : Graph(n, std::span<const std::pair<Vertex, Vertex>>{}) {}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
    : Graph([n] {
        if (n < 0) throw PreconditionError("negative vertex count");
        std::vector<int> l(n);
        std::iota(l.begin(), l.end(), 0);
        return l;
      }(),
            edges) {}

Graph::Graph(std::vector<int> labels, std::span<const std::pair<Vertex, Vertex>> edges)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  {
    std::vector<int> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionError("duplicate vertex label");
  }
  rows_.assign(n_, Bitset(n_));
  adj_.assign(n_, {});
  for (auto [u, v] : edges) {
    if (!contains(u)) throw UnknownVertex(u);
    if (!contains(v)) throw UnknownVertex(v);
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    if (rows_[u][v]) continue;
    rows_[u].set(v);
    rows_[v].set(u);
    ++m_;
  }
  for (Vertex v = 0; v < n_; ++v) {
    for (auto u = rows_[v].find_first(); u != Bitset::npos; u = rows_[v].find_next(u))
      adj_[v].push_back(static_cast<Vertex>(u));
  }
}

std::optional<Vertex> Graph::find_label(int label) const {
  for (Vertex v = 0; v < n_; ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

Vertex Graph::vertex_of(int label) const {
  auto v = find_label(label);
  if (!v) throw UnknownVertex(label);
  return *v;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.labels_ == b.labels_ && a.rows_ == b.rows_;
}

void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw UnknownVertex(v);
}

void check_vertices(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) check_vertex(g, v);
}

VertexSet make_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

Bitset to_bitset(const Graph& g, std::span<const Vertex> s) {
  Bitset b(g.order());
  for (Vertex v : s) {
    check_vertex(g, v);
    b.set(v);
  }
  return b;
}

VertexSet from_bitset(const Bitset& b) {
  VertexSet out;
  for (auto v = b.find_first(); v != Bitset::npos; v = b.find_next(v))
    out.push_back(static_cast<Vertex>(v));
  return out;
}

bool is_stable(const Graph& g, std::span<const Vertex> s) {
  check_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  check_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
  return true;
}

bool covers(const Graph& g, std::span<const Vertex> b, std::span<const Vertex> c) {
  const Bitset bb = to_bitset(g, b);
  const Bitset cb = to_bitset(g, c);
  if (bb.intersects(cb)) return false;
  for (Vertex v : c)
    if (!g.row(v).intersects(bb)) return false;
  return true;
}

bool is_anticomplete(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
  const Bitset yb = to_bitset(g, y);
  check_vertices(g, x);
  for (Vertex v : x)
    if (g.row(v).intersects(yb)) return false;
  return true;
}

VertexSet neighbourhood(const Graph& g, std::span<const Vertex> s) {
  const Bitset sb = to_bitset(g, s);
  Bitset out(g.order());
  for (Vertex v : s) out |= g.row(v);
  out -= sb;
  return from_bitset(out);
}

std::vector<int> distances_from(const Graph& g, Vertex v, const Bitset* allowed) {
  check_vertex(g, v);
  std::vector<int> dist(g.order(), -1);
  if (allowed && !(*allowed)[v]) return dist;
  std::deque<Vertex> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbours(x)) {
      if (dist[y] >= 0 || (allowed && !(*allowed)[y])) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

int distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  int d = distances_from(g, u)[v];
  return d < 0 ? kInfinity : d;
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u, Vertex v,
                                                 const Bitset* allowed) {
  check_vertex(g, u);
  // Distances from v, then walk forward from u choosing the lowest neighbour
  // one step closer.
  auto dist = distances_from(g, v, allowed);
  if (dist[u] < 0) return std::nullopt;
  std::vector<Vertex> path{u};
  Vertex x = u;
  while (x != v) {
    for (Vertex y : g.neighbours(x)) {
      if (dist[y] == dist[x] - 1) {
        x = y;
        break;
      }
    }
    path.push_back(x);
  }
  return path;
}

VertexSet ball(const Graph& g, Vertex v, int r) {
  auto dist = distances_from(g, v);
  VertexSet out;
  for (Vertex u = 0; u < g.order(); ++u)
    if (dist[u] >= 0 && dist[u] <= r) out.push_back(u);
  return out;
}

Levelling bfs_levelling(const Graph& g, Vertex v) {
  auto dist = distances_from(g, v);
  Levelling lv;
  lv.root = v;
  lv.level_of = dist;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (dist[u] < 0) continue;
    if (static_cast<int>(lv.levels.size()) <= dist[u]) lv.levels.resize(dist[u] + 1);
    lv.levels[dist[u]].push_back(u);
  }
  return lv;
}

int odd_girth(const Graph& g) {
  const int n = g.order();
  int best = kInfinity;
  std::vector<int> dist(2 * n);
  std::deque<int> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[2 * s] = 0;
    queue.assign({2 * s});
    while (!queue.empty()) {
      int state = queue.front();
      queue.pop_front();
      if (dist[state] + 1 >= best) break;
      Vertex x = state / 2;
      int parity = state % 2;
      for (Vertex y : g.neighbours(x)) {
        int next = 2 * y + (1 - parity);
        if (dist[next] >= 0) continue;
        dist[next] = dist[state] + 1;
        queue.push_back(next);
      }
    }
    // A shortest odd closed walk through s; the global minimum over s is a
    // shortest odd cycle.
    if (dist[2 * s + 1] >= 0) best = std::min(best, dist[2 * s + 1]);
  }
  return best;
}

std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g) {
  const int target = odd_girth(g);
  if (target == kInfinity) return std::nullopt;
  const int half = (target - 1) / 2;
  for (Vertex s = 0; s < g.order(); ++s) {
    auto dist = distances_from(g, s);
    std::vector<Vertex> parent(g.order(), -1);
    for (Vertex x = 0; x < g.order(); ++x) {
      if (dist[x] <= 0) continue;
      for (Vertex y : g.neighbours(x))
        if (dist[y] == dist[x] - 1) {
          parent[x] = y;
          break;
        }
    }
    for (auto [a, b] : g.edges()) {
      if (dist[a] != half || dist[b] != half) continue;
      std::vector<Vertex> left{a}, right{b};
      while (left.back() != s) left.push_back(parent[left.back()]);
      while (right.back() != s) right.push_back(parent[right.back()]);
      std::vector<Vertex> cycle(left.rbegin(), left.rend());
      cycle.insert(cycle.end(), right.begin(), right.end() - 1);
      auto sorted = make_set(cycle);
      if (static_cast<int>(sorted.size()) == target) return cycle;
    }
  }
  return std::nullopt;
}

bool ball_chromatic_check(const Graph& g, Vertex v, int r) {
  return bipartition(induced_subgraph(g, ball(g, v, r))).has_value();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexSet kept = make_set({s.begin(), s.end()});
  check_vertices(g, kept);
  std::vector<int> index(g.order(), -1);
  std::vector<int> labels;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    index[kept[i]] = static_cast<int>(i);
    labels.push_back(g.label(kept[i]));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u : kept)
    for (Vertex v : g.neighbours(u))
      if (u < v && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  return Graph(std::move(labels), edges);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> s) {
  Bitset gone = to_bitset(g, s);
  VertexSet kept;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) kept.push_back(v);
  return induced_subgraph(g, kept);
}

std::vector<VertexSet> components_within(const Graph& g, std::span<const Vertex> s) {
  Bitset allowed = to_bitset(g, s);
  Bitset seen(g.order());
  std::vector<VertexSet> out;
  for (Vertex v : make_set({s.begin(), s.end()})) {
    if (seen[v]) continue;
    auto dist = distances_from(g, v, &allowed);
    VertexSet comp;
    for (Vertex u = 0; u < g.order(); ++u)
      if (dist[u] >= 0) {
        comp.push_back(u);
        seen.set(u);
      }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  VertexSet all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return components_within(g, all);
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_connected_within(const Graph& g, std::span<const Vertex> s) {
  return components_within(g, s).size() <= 1;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbours(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<VertexSet, VertexSet> out;
  for (Vertex v = 0; v < g.order(); ++v) (side[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

namespace {

void extend_induced_path(const Graph& g, Vertex target, int max_length, std::vector<Vertex>& path,
                         Bitset& blocked, std::vector<std::vector<Vertex>>& out) {
  Vertex x = path.back();
  if (x == target) {
    out.push_back(path);
    return;
  }
  if (static_cast<int>(path.size()) - 1 >= max_length) return;
  for (Vertex y : g.neighbours(x)) {
    if (blocked[y]) continue;
    // y must not touch any earlier path vertex except x.
    bool chord = false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (g.adjacent(y, path[i])) {
        chord = true;
        break;
      }
    if (chord) continue;
    path.push_back(y);
    blocked.set(y);
    extend_induced_path(g, target, max_length, path, blocked, out);
    blocked.reset(y);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Vertex>> induced_paths(const Graph& g, Vertex u, Vertex v,
                                               int max_length) {
  check_vertex(g, u);
  check_vertex(g, v);
  std::vector<std::vector<Vertex>> out;
  if (u == v) {
    out.push_back({u});
    return out;
  }
  std::vector<Vertex> path{u};
  Bitset blocked(g.order());
  blocked.set(u);
  extend_induced_path(g, v, max_length, path, blocked, out);
  return out;
}

namespace {

// Cycles are rooted at their minimum vertex; paths only use larger vertices.
template <class Accept>
void extend_cycle(const Graph& g, std::vector<Vertex>& path, Bitset& on_path, bool chordless,
                  Accept& accept) {
  const Vertex root = path.front();
  const Vertex x = path.back();
  for (Vertex y : g.neighbours(x)) {
    if (y < root) continue;
    if (y == root) {
      if (path.size() >= 3 && path[1] < x) accept(path);
      continue;
    }
    if (on_path[y]) continue;
    if (chordless) {
      // y may touch the root (closing the cycle) and x, but nothing between.
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (g.adjacent(y, path[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      if (g.adjacent(y, root) && path.size() >= 2) {
        path.push_back(y);
        if (path[1] < y) accept(path);
        path.pop_back();
        continue;
      }
    }
    path.push_back(y);
    on_path.set(y);
    extend_cycle(g, path, on_path, chordless, accept);
    on_path.reset(y);
    path.pop_back();
  }
}

std::vector<std::vector<Vertex>> collect_cycles(const Graph& g, bool chordless, bool odd_only,
                                                std::size_t limit) {
  std::vector<std::vector<Vertex>> out;
  auto accept = [&](const std::vector<Vertex>& c) {
    if (odd_only && c.size() % 2 == 0) return;
    if (out.size() >= limit) throw CapExceeded("too many cycles");
    out.push_back(c);
  };
  Bitset on_path(g.order());
  for (Vertex root = 0; root < g.order(); ++root) {
    std::vector<Vertex> path{root};
    on_path.set(root);
    extend_cycle(g, path, on_path, chordless, accept);
    on_path.reset(root);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> chordless_cycles(const Graph& g, bool odd_only) {
  return collect_cycles(g, true, odd_only, std::numeric_limits<std::size_t>::max());
}

std::vector<std::vector<Vertex>> simple_cycles(const Graph& g, bool odd_only, std::size_t limit) {
  return collect_cycles(g, false, odd_only, limit);
}

namespace {

void bron_kerbosch(const std::vector<Bitset>& rows, Bitset& r, Bitset p, Bitset x,
                   std::vector<VertexSet>& out) {
  if (p.none() && x.none()) {
    out.push_back(from_bitset(r));
    return;
  }
  // Pivot: vertex of p | x with the most neighbours in p.
  Bitset px = p | x;
  std::size_t pivot = px.find_first();
  std::size_t best = (rows[pivot] & p).count();
  for (auto u = px.find_next(pivot); u != Bitset::npos; u = px.find_next(u)) {
    std::size_t c = (rows[u] & p).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  Bitset candidates = p - rows[pivot];
  for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
    r.set(v);
    bron_kerbosch(rows, r, p & rows[v], x & rows[v], out);
    r.reset(v);
    p.reset(v);
    x.set(v);
  }
}

std::vector<VertexSet> cliques_of(const std::vector<Bitset>& rows, int n) {
  std::vector<VertexSet> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  Bitset r(n), p(n), x(n);
  p.set();
  bron_kerbosch(rows, r, p, x, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bitset> complement_rows(const Graph& g) {
  std::vector<Bitset> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    Bitset row = ~g.row(v);
    row.reset(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Branch and bound with a greedy colouring bound on the candidate set.
void max_clique_step(const std::vector<Bitset>& rows, Bitset& current, int size, const Bitset& cand,
                     VertexSet& best) {
  if (cand.none()) {
    if (size > static_cast<int>(best.size())) best = from_bitset(current);
    return;
  }
  // Colour classes of the candidates give an upper bound per prefix.
  std::vector<Vertex> order;
  std::vector<int> bound;
  Bitset left = cand;
  int colour = 0;
  while (left.any()) {
    ++colour;
    Bitset avail = left;
    for (auto v = avail.find_first(); v != Bitset::npos; v = avail.find_next(v)) {
      order.push_back(static_cast<Vertex>(v));
      bound.push_back(colour);
      left.reset(v);
      avail -= rows[v];
    }
  }
  // Highest colour first, so the remaining prefix bound only decreases.
  Bitset remaining = cand;
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    if (size + bound[i] <= static_cast<int>(best.size())) return;
    const Vertex v = order[i];
    current.set(v);
    max_clique_step(rows, current, size + 1, remaining & rows[v], best);
    current.reset(v);
    remaining.reset(v);
  }
}

VertexSet maximum_clique_of(const std::vector<Bitset>& rows, int n) {
  VertexSet best;
  Bitset current(n), cand(n);
  cand.set();
  max_clique_step(rows, current, 0, cand, best);
  return best;
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<Bitset> rows;
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(g.row(v));
  return cliques_of(rows, g.order());
}

std::vector<VertexSet> maximal_stable_sets(const Graph& g) {
  return cliques_of(complement_rows(g), g.order());
}

int clique_number(const Graph& g) {
  std::vector<Bitset> rows;
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(g.row(v));
  return static_cast<int>(maximum_clique_of(rows, g.order()).size());
}

VertexSet maximum_stable_set(const Graph& g) { return maximum_clique_of(complement_rows(g), g.order()); }

std::vector<VertexSet> all_stable_sets(const Graph& g) {
  std::vector<VertexSet> out{{}};
  // Extend each set only by vertices larger than its maximum.
  for (std::size_t i = 0; i < out.size(); ++i) {
    Vertex start = out[i].empty() ? 0 : out[i].back() + 1;
    for (Vertex v = start; v < g.order(); ++v) {
      bool ok = true;
      for (Vertex u : out[i])
        if (g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      VertexSet next = out[i];
      next.push_back(v);
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Vertex>> find_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    Bitset common = g.row(u) & g.row(v);
    auto w = common.find_next(v);
    if (w != Bitset::npos) return std::vector<Vertex>{u, v, static_cast<Vertex>(w)};
  }
  return std::nullopt;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& colour_a,
                        const std::vector<int>& colour_b, const std::vector<Vertex>& order,
                        std::size_t depth, std::vector<Vertex>& map, Bitset& used) {
  if (depth == order.size()) return true;
  Vertex x = order[depth];
  for (Vertex y = 0; y < b.order(); ++y) {
    if (used[y] || colour_a[x] != colour_b[y]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      Vertex px = order[i];
      if (a.adjacent(x, px) != b.adjacent(y, map[px])) ok = false;
    }
    if (!ok) continue;
    map[x] = y;
    used.set(y);
    if (extend_isomorphism(a, b, colour_a, colour_b, order, depth + 1, map, used)) return true;
    used.reset(y);
  }
  return false;
}

// Colour refinement on two graphs at once so colour ids agree.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& a, const Graph& b) {
  std::vector<int> ca(a.order()), cb(b.order());
  for (Vertex v = 0; v < a.order(); ++v) ca[v] = a.degree(v);
  for (Vertex v = 0; v < b.order(); ++v) cb[v] = b.degree(v);
  for (int round = 0; round < a.order(); ++round) {
    std::map<std::vector<int>, int> ids;
    auto signature = [](const Graph& g, const std::vector<int>& c, Vertex v) {
      std::vector<int> sig;
      for (Vertex u : g.neighbours(v)) sig.push_back(c[u]);
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), c[v]);
      return sig;
    };
    std::vector<std::vector<int>> sa, sb;
    for (Vertex v = 0; v < a.order(); ++v) sa.push_back(signature(a, ca, v));
    for (Vertex v = 0; v < b.order(); ++v) sb.push_back(signature(b, cb, v));
    for (auto& s : sa) ids.emplace(s, 0);
    for (auto& s : sb) ids.emplace(s, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<int> na, nb;
    for (auto& s : sa) na.push_back(ids[s]);
    for (auto& s : sb) nb.push_back(ids[s]);
    bool stable = std::set<int>(na.begin(), na.end()).size() ==
                  std::set<int>(ca.begin(), ca.end()).size();
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return {ca, cb};
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  auto [ca, cb] = refine(a, b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Map rare colours first, then follow adjacency so partial maps prune early.
  std::map<int, int> freq;
  for (int c : ca) ++freq[c];
  std::vector<Vertex> order;
  Bitset placed(a.order());
  while (static_cast<int>(order.size()) < a.order()) {
    Vertex best = -1;
    int best_links = -1;
    for (Vertex v = 0; v < a.order(); ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (Vertex u : order) links += a.adjacent(u, v);
      if (best < 0 || links > best_links ||
          (links == best_links && freq[ca[v]] < freq[ca[best]])) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed.set(best);
  }
  std::vector<Vertex> map(a.order(), -1);
  Bitset used(b.order());
  if (!extend_isomorphism(a, b, ca, cb, order, 0, map, used)) return std::nullopt;
  return map;
}

}  // namespace tperf
