#include "tperf/tminors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_set>

#include "tperf/error.hpp"
#include "tperf/ropes.hpp"

namespace tperf {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
}

std::string label_text(const Graph& g, Vertex v) { return std::to_string(g.label(v)); }

std::vector<int> labels_of(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

// Positions of the hub's neighbours on the cycle and a triple of them that
// cuts the cycle into odd arcs.
std::optional<std::array<int, 3>> odd_arc_triple(const std::vector<int>& positions, int length) {
  const int k = static_cast<int>(positions.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l) {
        const int a = positions[j] - positions[i];
        const int b = positions[l] - positions[j];
        const int c = length - a - b;
        if (a % 2 == 1 && b % 2 == 1 && c % 2 == 1) return std::array<int, 3>{i, j, l};
      }
  return std::nullopt;
}

// Hub extraction on the current trace result, which must be exactly the cycle
// plus the hub.
OddWheelWitness finish_with_hub(TMinorTrace trace, std::vector<int> cycle, int hub) {
  const Graph& h = trace.result;
  const int len = static_cast<int>(cycle.size());
  if (len < 3 || len % 2 == 0)
    throw PreconditionError("cycle has length " + std::to_string(len) + ", expected odd >= 3");
  std::vector<Vertex> cyc;
  for (int l : cycle) cyc.push_back(h.vertex_of(l));
  const Vertex v = h.vertex_of(hub);
  if (std::find(cyc.begin(), cyc.end(), v) != cyc.end())
    throw PreconditionError("hub " + std::to_string(hub) + " lies on the cycle");
  if (make_set(cyc).size() != cyc.size()) throw PreconditionError("cycle repeats a vertex");
  if (h.order() != len + 1)
    throw PreconditionError("graph has " + std::to_string(h.order() - len - 1) +
                            " vertices besides the cycle and the hub");
  const Bitset on_cycle = to_bitset(h, cyc);
  for (int i = 0; i < len; ++i) {
    const Vertex a = cyc[i], b = cyc[(i + 1) % len];
    if (!h.adjacent(a, b))
      throw PreconditionError("cycle vertices " + label_text(h, a) + " and " + label_text(h, b) +
                              " are not adjacent");
    if ((h.row(a) & on_cycle).count() != 2)
      throw PreconditionError("cycle has a chord at vertex " + label_text(h, a));
  }
  std::vector<int> positions;
  for (int i = 0; i < len; ++i)
    if (h.adjacent(v, cyc[i])) positions.push_back(i);
  if (!odd_arc_triple(positions, len))
    throw PreconditionError("no three neighbours of the hub cut the cycle into odd paths");

  while (true) {
    const Graph& cur = trace.result;
    const Vertex hv = cur.vertex_of(hub);
    int pick = -1;
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
      if (!cur.adjacent(hv, cur.vertex_of(cycle[i])) && (pick == -1 || cycle[i] < cycle[pick]))
        pick = i;
    if (pick == -1) break;
    const int n = static_cast<int>(cycle.size());
    const int u = cycle[pick];
    const int left = cycle[(pick + n - 1) % n], right = cycle[(pick + 1) % n];
    apply_step(trace, {TMinorStep::Kind::Contract, u});
    std::erase_if(cycle, [&](int l) { return l == left || l == right; });
  }
  if (!is_odd_wheel(trace.result)) throw VerificationFailure("contraction did not end in an odd wheel");
  OddWheelWitness w;
  w.hub_label = hub;
  w.rim_labels = std::move(cycle);
  w.trace = std::move(trace);
  return w;
}

std::vector<Vertex> rope_cycle(const ArithmeticRope& rope, const std::vector<int>& h) {
  std::vector<Vertex> out;
  for (int i = 0; i < rope.r(); ++i) {
    const auto& p = rope.segments[i].choose(h[i]);
    out.insert(out.end(), p.begin(), p.end() - 1);
  }
  return out;
}

// Colour refinement hash; equal for isomorphic graphs.
std::uint64_t wl_hash(const Graph& g) {
  std::vector<std::uint64_t> colour(g.order(), 1);
  for (Vertex v = 0; v < g.order(); ++v) colour[v] = static_cast<std::uint64_t>(g.degree(v)) + 1;
  std::vector<std::uint64_t> next(g.order());
  for (int round = 0; round < 4; ++round) {
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<std::uint64_t> nb;
      for (Vertex u : g.neighbours(v)) nb.push_back(colour[u]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = kFnvOffset;
      fnv_mix(h, colour[v]);
      for (auto x : nb) fnv_mix(h, x);
      next[v] = h;
    }
    colour.swap(next);
  }
  std::sort(colour.begin(), colour.end());
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, static_cast<std::uint64_t>(g.order()));
  fnv_mix(h, g.size());
  for (auto x : colour) fnv_mix(h, x);
  return h;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::optional<OddWheelWitness> hub_route(const Graph& g) {
  if (g.order() > 40) return std::nullopt;
  for (const auto& cyc : chordless_cycles(g, true)) {
    if (cyc.size() < 3) continue;
    const Bitset on_cycle = to_bitset(g, cyc);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (on_cycle[v] || static_cast<int>((g.row(v) & on_cycle).count()) < 3) continue;
      std::vector<int> positions;
      for (int i = 0; i < static_cast<int>(cyc.size()); ++i)
        if (g.adjacent(v, cyc[i])) positions.push_back(i);
      if (!odd_arc_triple(positions, static_cast<int>(cyc.size()))) continue;
      TMinorTrace trace = start_trace(g);
      for (Vertex w = 0; w < g.order(); ++w)
        if (w != v && !on_cycle[w]) apply_step(trace, {TMinorStep::Kind::Delete, g.label(w)});
      return finish_with_hub(std::move(trace), labels_of(g, cyc), g.label(v));
    }
  }
  return std::nullopt;
}

std::optional<OddWheelWitness> rope_route(const Graph& g, std::size_t& spent, std::size_t budget) {
  if (odd_girth(g) < 11) return std::nullopt;
  for (Vertex root = 0; root < g.order(); ++root) {
    const Levelling lev = bfs_levelling(g, root);
    for (int t = 5; t <= lev.depth(); ++t) {
      const auto& level = lev.levels[t];
      spent += level.size();
      if (spent > budget) return std::nullopt;
      for (int r : {5, 4, 3}) {
        try {
          ArithmeticRope rope = find_rope(g, level, r);
          return extract_wheel_from_levelled_rope(g, root, rope);
        } catch (const Error&) {
        }
      }
    }
  }
  return std::nullopt;
}

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const Graph& g, std::size_t budget) : base_(g), budget_(budget) {}

  std::optional<TMinorTrace> run(std::size_t already_spent) {
    nodes_ = already_spent;
    TMinorTrace trace = start_trace(base_);
    if (dfs(trace, 0)) return found_;
    return std::nullopt;
  }

 private:
  bool dfs(const TMinorTrace& trace, int depth) {
    if (++nodes_ > budget_) return false;
    const Graph& g = trace.result;
    if (is_odd_wheel(g)) {
      found_ = trace;
      return true;
    }
    if (depth >= base_.order() || g.order() < 4 || max_degree(g) < 3 || bipartition(g)) return false;
    if (!seen_.insert(wl_hash(g)).second) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) < 2 || !is_stable(g, g.neighbours(v))) continue;
      TMinorTrace next = trace;
      apply_step(next, {TMinorStep::Kind::Contract, g.label(v)});
      if (dfs(next, depth + 1)) return true;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      TMinorTrace next = trace;
      apply_step(next, {TMinorStep::Kind::Delete, g.label(v)});
      if (dfs(next, depth + 1)) return true;
    }
    return false;
  }

  const Graph& base_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::unordered_set<std::uint64_t> seen_;
  TMinorTrace found_;
};

OddWheelWitness witness_from_result(TMinorTrace trace) {
  auto shape = is_odd_wheel(trace.result);
  OddWheelWitness w;
  w.hub_label = trace.result.label(shape->hub);
  w.rim_labels = labels_of(trace.result, shape->rim);
  w.trace = std::move(trace);
  return w;
}

}  // namespace

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, static_cast<std::uint64_t>(g.order()));
  for (int l : g.labels()) fnv_mix(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(l)));
  for (auto [u, v] : g.edges()) {
    fnv_mix(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(g.label(u))));
    fnv_mix(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(g.label(v))));
  }
  return h;
}

Graph t_contract(const Graph& g, Vertex v) {
  check_vertex(g, v);
  if (!is_stable(g, g.neighbours(v)))
    throw PreconditionError("neighbourhood of vertex " + label_text(g, v) + " is not stable");
  Bitset merged(g.order());
  for (Vertex u : g.neighbours(v)) merged.set(u);
  std::vector<int> index(g.order(), -1);
  std::vector<int> labels;
  for (Vertex w = 0; w < g.order(); ++w)
    if (!merged[w]) {
      index[w] = static_cast<int>(labels.size());
      labels.push_back(g.label(w));
    }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [a, b] : g.edges()) {
    const Vertex x = merged[a] ? v : a;
    const Vertex y = merged[b] ? v : b;
    if (x != y) edges.emplace_back(index[x], index[y]);
  }
  return Graph(std::move(labels), edges);
}

TMinorTrace start_trace(const Graph& g) {
  TMinorTrace t;
  t.base_hash = graph_hash(g);
  t.result = g;
  for (int l : g.labels()) t.classes[l] = {l};
  return t;
}

void apply_step(TMinorTrace& trace, const TMinorStep& step) {
  const Graph& g = trace.result;
  const Vertex v = g.vertex_of(step.label);
  if (step.kind == TMinorStep::Kind::Delete) {
    const Vertex del[] = {v};
    trace.result = delete_vertices(g, del);
    trace.classes.erase(step.label);
  } else {
    Graph next = t_contract(g, v);
    auto& target = trace.classes[step.label];
    for (Vertex u : g.neighbours(v)) {
      auto it = trace.classes.find(g.label(u));
      target.insert(target.end(), it->second.begin(), it->second.end());
      trace.classes.erase(it);
    }
    std::sort(target.begin(), target.end());
    trace.result = std::move(next);
  }
  trace.steps.push_back(step);
}

TMinorTrace replay(const Graph& base, const std::vector<TMinorStep>& steps) {
  TMinorTrace t = start_trace(base);
  for (const auto& s : steps) apply_step(t, s);
  return t;
}

CheckResult verify_trace(const Graph& base, const TMinorTrace& trace) {
  if (trace.base_hash != graph_hash(base)) return fail("base graph hash mismatch");
  TMinorTrace fresh = start_trace(base);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    try {
      apply_step(fresh, trace.steps[i]);
    } catch (const Error& e) {
      return fail("step " + std::to_string(i) + " is invalid: " + e.what());
    }
  }
  if (!(fresh.result == trace.result)) return fail("replayed graph differs from the recorded result");
  if (fresh.classes != trace.classes) return fail("replayed contraction map differs");
  return {};
}

std::optional<WheelShape> is_odd_wheel(const Graph& g) {
  const int n = g.order();
  if (n < 4 || (n - 1) % 2 == 0 || g.size() != static_cast<std::size_t>(2 * (n - 1))) return std::nullopt;
  for (Vertex hub = 0; hub < n; ++hub) {
    if (g.degree(hub) != n - 1) continue;
    Bitset rest(n);
    rest.set();
    rest.reset(hub);
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v)
      if (v != hub && (g.row(v) & rest).count() != 2) ok = false;
    if (!ok) continue;
    WheelShape shape;
    shape.hub = hub;
    const Vertex start = hub == 0 ? 1 : 0;
    Vertex prev = -1, cur = start;
    do {
      shape.rim.push_back(cur);
      Vertex next = -1;
      for (Vertex u : g.neighbours(cur))
        if (u != hub && u != prev && (next == -1 || (prev == -1 && u < next))) next = u;
      prev = cur;
      cur = next;
    } while (cur != start && static_cast<int>(shape.rim.size()) < n);
    if (static_cast<int>(shape.rim.size()) == n - 1 && cur == start) return shape;
  }
  return std::nullopt;
}

CheckResult verify_wheel_witness(const Graph& base, const OddWheelWitness& w) {
  if (auto r = verify_trace(base, w.trace); !r) return r;
  const Graph& g = w.trace.result;
  if (!is_odd_wheel(g)) return fail("trace result is not an odd wheel");
  auto hub = g.find_label(w.hub_label);
  if (!hub || g.degree(*hub) != g.order() - 1) return fail("recorded hub is not a hub of the result");
  const int k = static_cast<int>(w.rim_labels.size());
  if (k != g.order() - 1) return fail("rim has the wrong length");
  std::vector<Vertex> rim;
  for (int l : w.rim_labels) {
    auto v = g.find_label(l);
    if (!v || *v == *hub) return fail("rim label " + std::to_string(l) + " is not a rim vertex");
    rim.push_back(*v);
  }
  if (make_set(rim).size() != rim.size()) return fail("rim repeats a vertex");
  for (int i = 0; i < k; ++i)
    if (!g.adjacent(rim[i], rim[(i + 1) % k])) return fail("consecutive rim vertices are not adjacent");
  return {};
}

OddWheelWitness extract_wheel_from_hub(const Graph& g, const std::vector<Vertex>& cycle, Vertex v) {
  check_vertices(g, cycle);
  check_vertex(g, v);
  return finish_with_hub(start_trace(g), labels_of(g, cycle), g.label(v));
}

OddWheelWitness extract_wheel_via_bipartite(const Graph& g, const VertexSet& x,
                                            const ArithmeticRope& rope, const VertexSet& a_side,
                                            const VertexSet& b_side) {
  check_vertices(g, x);
  check_vertices(g, a_side);
  check_vertices(g, b_side);
  const VertexSet xs = make_set(x), as = make_set(a_side), bs = make_set(b_side);
  std::vector<int> seen(g.order(), 0);
  for (const auto* part : {&xs, &as, &bs})
    for (Vertex v : *part) ++seen[v];
  for (Vertex v = 0; v < g.order(); ++v)
    if (seen[v] != 1)
      throw PreconditionError("X, A and B must partition the vertex set (vertex " + label_text(g, v) + ")");
  const Bitset in_x = to_bitset(g, xs);
  for (const auto& seg : rope.segments)
    for (const auto* p : {&seg.odd, &seg.even}) {
      check_vertices(g, *p);
      for (Vertex v : *p)
        if (!in_x[v]) throw PreconditionError("rope vertex " + label_text(g, v) + " lies outside X");
    }
  if (auto verdict = verify_rope(g, rope); !verdict)
    throw PreconditionError("rope fails its " + verdict.clause + " clause: " + verdict.detail);
  if (!is_stable(g, as) || !is_stable(g, bs)) throw PreconditionError("A and B must be stable");
  VertexSet outside;
  std::set_union(as.begin(), as.end(), bs.begin(), bs.end(), std::back_inserter(outside));
  if (outside.empty() || !is_connected_within(g, outside))
    throw PreconditionError("G - X must be connected and nonempty");
  if (!is_anticomplete(g, as, xs)) throw PreconditionError("A has a neighbour in X");
  const Bitset in_b = to_bitset(g, bs);
  int reaching = 0;
  for (Vertex q : rope.anchors)
    if ((g.row(q) & in_b).any()) ++reaching;
  if (reaching < 3)
    throw PreconditionError("only " + std::to_string(reaching) + " anchors have a neighbour in B");

  TMinorTrace trace = start_trace(g);
  for (Vertex a : as) apply_step(trace, {TMinorStep::Kind::Contract, g.label(a)});

  int hub = 0, extra = 0;
  for (Vertex v = 0; v < trace.result.order(); ++v)
    if (!in_x[g.vertex_of(trace.result.label(v))]) {
      hub = trace.result.label(v);
      ++extra;
    }
  if (extra != 1) throw VerificationFailure("G - X did not collapse to a single vertex");

  const Graph& cur = trace.result;
  const Vertex hv = cur.vertex_of(hub);
  std::vector<int> eligible;
  for (int i = 0; i < rope.r(); ++i)
    if (cur.adjacent(hv, cur.vertex_of(g.label(rope.anchors[i])))) eligible.push_back(i);

  const int r = rope.r();
  std::vector<int> chosen_h;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r) && chosen_h.empty(); ++mask) {
    std::vector<int> h(r);
    for (int i = 0; i < r; ++i) h[i] = (mask >> (r - 1 - i)) & 1 ? 2 : 1;
    // Prefix lengths of the closed walk along the chosen paths.
    std::vector<int> start(r + 1, 0);
    for (int i = 0; i < r; ++i)
      start[i + 1] = start[i] + static_cast<int>(rope.segments[i].choose(h[i]).size()) - 1;
    std::vector<int> positions;
    for (int i : eligible) positions.push_back(start[i]);
    if (odd_arc_triple(positions, start[r])) chosen_h = h;
  }
  if (chosen_h.empty())
    throw VerificationFailure("no choice vector gives three anchors on odd arcs");

  const std::vector<Vertex> cyc = rope_cycle(rope, chosen_h);
  const Bitset on_cycle = to_bitset(g, cyc);
  for (Vertex v : xs)
    if (!on_cycle[v]) apply_step(trace, {TMinorStep::Kind::Delete, g.label(v)});
  return finish_with_hub(std::move(trace), labels_of(g, cyc), hub);
}

VertexSet connected_bipartite_containing(const Graph& g, const VertexSet& s, int param) {
  check_vertices(g, s);
  const VertexSet set = make_set(s);
  if (param < 1) throw PreconditionError("parameter must be positive");
  if (!is_connected(g)) throw PreconditionError("graph must be connected");
  if (static_cast<int>(set.size()) > 2 * param)
    throw PreconditionError("|S| = " + std::to_string(set.size()) + " exceeds " + std::to_string(2 * param));
  if (!is_stable(g, set)) throw PreconditionError("S must be stable");
  if (const int og = odd_girth(g); og != kInfinity && og < 2 * param + 1)
    throw PreconditionError("odd girth " + std::to_string(og) + " is below " + std::to_string(2 * param + 1));
  if (set.empty()) return {};

  Bitset keep(g.order());
  for (Vertex t : set) {
    auto p = shortest_path(g, set.front(), t);
    for (Vertex v : *p) keep.set(v);
  }
  const Bitset in_s = to_bitset(g, set);
  // Prune until no single vertex outside S can go.
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!keep[v] || in_s[v]) continue;
      Bitset trial = keep;
      trial.reset(v);
      for (const auto& comp : components_within(g, from_bitset(trial))) {
        if (!std::binary_search(comp.begin(), comp.end(), set.front())) continue;
        if (std::includes(comp.begin(), comp.end(), set.begin(), set.end())) {
          keep = to_bitset(g, comp);
          changed = true;
        }
        break;
      }
    }
  }
  VertexSet h = from_bitset(keep);
  const Graph sub = induced_subgraph(g, h);
  if (!bipartition(sub)) {
    auto cyc = shortest_odd_cycle(sub);
    throw VerificationFailure("minimal connected superset is not bipartite", labels_of(sub, *cyc));
  }
  return h;
}

OddWheelWitness extract_wheel_from_levelled_rope(const Graph& g, Vertex root, const ArithmeticRope& rope) {
  check_vertex(g, root);
  if (rope.r() < 3) throw PreconditionError("need at least three anchors");
  if (auto verdict = verify_rope(g, rope); !verdict)
    throw PreconditionError("rope fails its " + verdict.clause + " clause: " + verdict.detail);
  const Levelling lev = bfs_levelling(g, root);
  const int t = lev.level_of[rope.anchors.front()];
  VertexSet rope_vertices;
  for (const auto& seg : rope.segments)
    for (const auto* p : {&seg.odd, &seg.even}) rope_vertices.insert(rope_vertices.end(), p->begin(), p->end());
  rope_vertices = make_set(rope_vertices);
  for (Vertex v : rope_vertices)
    if (lev.level_of[v] != t) throw PreconditionError("rope does not lie in a single level");
  if (t < 3) throw PreconditionError("rope level must be at least 3");

  const int used = std::min(rope.r(), 5);
  std::vector<Vertex> xs, ys;
  for (int i = 0; i < used; ++i) {
    Vertex x = -1, y = -1;
    for (Vertex u : g.neighbours(rope.anchors[i]))
      if (lev.level_of[u] == t - 1) {
        x = u;
        break;
      }
    for (Vertex u : g.neighbours(x))
      if (lev.level_of[u] == t - 2) {
        y = u;
        break;
      }
    xs.push_back(x);
    ys.push_back(y);
  }
  VertexSet star = xs;
  star.insert(star.end(), ys.begin(), ys.end());
  for (int i = 0; i <= t - 3; ++i) star.insert(star.end(), lev.levels[i].begin(), lev.levels[i].end());
  star = make_set(star);
  const Graph sub = induced_subgraph(g, star);
  VertexSet s_sub;
  for (Vertex x : xs) {
    auto it = std::lower_bound(star.begin(), star.end(), x);
    s_sub.push_back(static_cast<Vertex>(it - star.begin()));
    if (sub.degree(s_sub.back()) != 1) throw PreconditionError("connector vertex is not a leaf");
  }
  VertexSet h_sub = connected_bipartite_containing(sub, make_set(s_sub), 3);
  VertexSet h;
  for (Vertex v : h_sub) h.push_back(star[v]);

  const Graph hg = induced_subgraph(g, h);
  const auto sides = *bipartition(hg);
  Bitset first(g.order());
  for (Vertex v : sides.first) first.set(h[v]);
  int on_first = 0;
  for (Vertex x : xs) on_first += first[x];
  const bool use_first = on_first >= 3;
  if (!use_first && used - on_first < 3) throw VerificationFailure("no three connectors share a side");
  std::vector<Vertex> chosen, dropped;
  for (Vertex x : xs) {
    if (first[x] == use_first && chosen.size() < 3) chosen.push_back(x);
    else dropped.push_back(x);
  }
  std::erase_if(h, [&](Vertex v) { return std::find(dropped.begin(), dropped.end(), v) != dropped.end(); });

  VertexSet keep = h;
  keep.insert(keep.end(), rope_vertices.begin(), rope_vertices.end());
  keep = make_set(keep);
  const Graph gs = induced_subgraph(g, keep);
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(keep.begin(), keep.end(), v) - keep.begin());
  };
  ArithmeticRope lr;
  for (Vertex q : rope.anchors) lr.anchors.push_back(local(q));
  for (const auto& seg : rope.segments) {
    RopeSegment ls;
    for (Vertex v : seg.odd) ls.odd.push_back(local(v));
    for (Vertex v : seg.even) ls.even.push_back(local(v));
    lr.segments.push_back(std::move(ls));
  }
  VertexSet x_local, a_local, b_local;
  for (Vertex v : rope_vertices) x_local.push_back(local(v));
  for (Vertex v : h) (first[v] == use_first ? b_local : a_local).push_back(local(v));
  OddWheelWitness inner =
      extract_wheel_via_bipartite(gs, make_set(x_local), lr, make_set(a_local), make_set(b_local));

  std::vector<TMinorStep> steps;
  const Bitset kept = to_bitset(g, keep);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!kept[v]) steps.push_back({TMinorStep::Kind::Delete, g.label(v)});
  steps.insert(steps.end(), inner.trace.steps.begin(), inner.trace.steps.end());
  inner.trace = replay(g, steps);
  return inner;
}

std::optional<OddWheelWitness> find_odd_wheel_tminor(const Graph& g, const SearchBudget& budget,
                                                     const Caps& caps) {
  std::optional<OddWheelWitness> w;
  if (is_odd_wheel(g)) {
    w = witness_from_result(start_trace(g));
  } else if (g.order() <= caps.combinatorial) {
    w = hub_route(g);
    std::size_t spent = 0;
    if (!w) w = rope_route(g, spent, budget.nodes);
    if (!w) {
      if (auto t = ExhaustiveSearch(g, budget.nodes).run(spent)) w = witness_from_result(std::move(*t));
    }
  }
  if (w && !verify_wheel_witness(g, *w)) return std::nullopt;
  return w;
}

}  // namespace tperf
