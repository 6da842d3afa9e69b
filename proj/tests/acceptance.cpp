// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "support.hpp"
#include "tperf/colouring.hpp"
#include "tperf/corpus.hpp"
#include "tperf/error.hpp"
#include "tperf/polytopes.hpp"
#include "tperf/ropes.hpp"
#include "tperf/tminors.hpp"

using namespace tperf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failures; the first few are kept for the report.
struct Tally {
  int checks = 0;
  int failures = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ < 3) first += (first.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures == 0) return {true, summary + " (" + std::to_string(checks) + " checks)"};
    return {false, std::to_string(failures) + "/" + std::to_string(checks) + " checks failed: " + first};
  }
};

std::vector<NamedGraph> t_perfect_corpus() {
  std::vector<NamedGraph> out;
  for (const auto& e : named_corpus())
    if (is_t_perfect(e.graph).holds) out.push_back(e);
  return out;
}

int max_ell(const Graph& g) {
  const int og = odd_girth(g);
  return og == kInfinity ? 6 : std::min(6, (og - 1) / 2);
}

Outcome polytope_fixtures() {
  Tally t;
  auto check = [&](const char* name, auto oracle, bool expected, const char* what) {
    const Graph g = make_named(name);
    const auto r = oracle(g);
    t.expect(r.holds == expected, std::string(what) + "(" + name + ") != " + (expected ? "true" : "false"));
    if (!r.holds) t.expect(static_cast<bool>(verify_witness(g, *r.witness)), std::string("witness for ") + name);
  };
  auto tp = [](const Graph& g) { return is_t_perfect(g); };
  auto hp = [](const Graph& g) { return is_h_perfect(g); };
  auto hbp = [](const Graph& g) { return is_hbar_perfect(g); };
  for (const char* n : {"K4", "W3", "W5", "W7"}) check(n, tp, false, "t");
  for (const char* n : {"C3", "C5", "C7", "C9", "C11", "C6", "C8", "fig1a", "fig1b"}) check(n, tp, true, "t");
  check("antiC7", hp, false, "h");
  check("K4", hp, true, "h");
  check("C5", hbp, true, "hbar");
  check("joinC5C5", hbp, true, "hbar");
  check("C7", hbp, false, "hbar");
  return t.outcome("all oracle verdicts match, witnesses verified");
}

Outcome four_critical() {
  Tally t;
  for (const char* name : {"fig1a", "fig1b"}) {
    const Graph g = make_named(name);
    t.expect(chi_exact(g).chi == 4, std::string("chi(") + name + ") != 4");
    t.expect(oracle::chromatic_number(g) == 4, std::string("oracle chi(") + name + ") != 4");
    for (Vertex v = 0; v < g.order(); ++v) {
      const Graph h = delete_vertices(g, std::vector<Vertex>{v});
      t.expect(chi_exact(h).chi == 3, std::string(name) + " - " + std::to_string(v) + " is not 3-chromatic");
    }
  }
  return t.outcome("fig1a and fig1b are 4-critical");
}

Outcome fractional() {
  Tally t;
  for (int ell = 1; ell <= 6; ++ell) {
    const auto r = chi_fractional(cycle(2 * ell + 1));
    t.expect(r.value == Rational(2) + Rational(1, ell), "chi*(C" + std::to_string(2 * ell + 1) + ") = " +
                                                            to_string(r.value));
    t.expect(static_cast<bool>(verify_fractional_colouring(cycle(2 * ell + 1), r.colouring)), "fractional audit");
  }
  int runs = 0;
  for (const auto& e : t_perfect_corpus())
    for (int ell = 1; ell <= max_ell(e.graph); ++ell) {
      const auto rep = fractional_bound_check(e.graph, ell);
      ++runs;
      const int og = oracle::odd_girth(e.graph);
      const Rational bound = Rational(2) + Rational(1, ell);
      t.expect(rep.passed && rep.chi_star <= bound && ((rep.chi_star == bound) == (og == 2 * ell + 1)),
               e.name + " ell=" + std::to_string(ell) + " chi*=" + to_string(rep.chi_star));
    }
  return t.outcome("odd cycles exact, bound check on " + std::to_string(runs) + " (graph, ell) pairs");
}

Outcome odd_girth_reduction() {
  Tally t;
  int runs = 0;
  for (const auto& e : t_perfect_corpus())
    for (int ell = 1; ell <= max_ell(e.graph); ++ell) {
      ++runs;
      const std::string tag = e.name + " ell=" + std::to_string(ell);
      try {
        const VertexSet s = reduce_odd_girth(e.graph, ell);
        t.expect(oracle::is_stable(e.graph, s), tag + " not stable");
        t.expect((2 * ell + 1) * static_cast<long long>(s.size()) >= static_cast<long long>(ell) * e.graph.order(),
                 tag + " too small");
        const int og = oracle::odd_girth(delete_vertices(e.graph, s));
        t.expect(og == -1 || og >= 2 * ell + 3, tag + " odd girth " + std::to_string(og));
      } catch (const std::exception& ex) {
        t.expect(false, tag + ": " + ex.what());
      }
    }
  return t.outcome(std::to_string(runs) + " reductions verified");
}

Outcome wheel_extraction() {
  Tally t;
  oracle::Rng rng(5005);
  int small = 0;
  for (int i = 0; i < 100; ++i) {
    const auto inst = oracle::random_hub_instance(rng);
    try {
      const auto w = extract_wheel_from_hub(inst.graph, inst.cycle, inst.hub);
      t.expect(static_cast<bool>(verify_trace(inst.graph, w.trace)), "trace " + std::to_string(i));
      t.expect(is_odd_wheel(w.trace.result).has_value(), "result " + std::to_string(i) + " is not an odd wheel");
      if (inst.graph.order() <= 12) {
        ++small;
        t.expect(!is_t_perfect(inst.graph).holds, "instance " + std::to_string(i) + " reported t-perfect");
      }
    } catch (const std::exception& ex) {
      t.expect(false, "instance " + std::to_string(i) + ": " + ex.what());
    }
  }
  return t.outcome("100 instances, " + std::to_string(small) + " cross-checked against the t-perfection oracle");
}

Outcome bipartite_connector() {
  Tally t;
  oracle::Rng rng(6006);
  for (int i = 0; i < 200; ++i) {
    const int param = 1 + i % 3;
    const int n = std::uniform_int_distribution<int>(6, 18)(rng);
    const Graph g = oracle::random_high_odd_girth(rng, n, n / 2, 2 * param + 1);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const int want = std::uniform_int_distribution<int>(1, 2 * param)(rng);
    VertexSet s;
    for (Vertex v : order)
      if (static_cast<int>(s.size()) < want && std::none_of(s.begin(), s.end(), [&](Vertex u) { return g.adjacent(u, v); }))
        s.push_back(v);
    s = make_set(s);
    const std::string tag = "instance " + std::to_string(i);
    try {
      const VertexSet h = connected_bipartite_containing(g, s, param);
      t.expect(std::includes(h.begin(), h.end(), s.begin(), s.end()), tag + " misses S");
      t.expect(oracle::connected_within(g, h), tag + " disconnected");
      t.expect(oracle::odd_girth(induced_subgraph(g, h)) == -1, tag + " not bipartite");
      for (Vertex v : h) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        VertexSet rest;
        for (Vertex u : h)
          if (u != v) rest.push_back(u);
        t.expect(!oracle::connected_within(g, rest), tag + " not minimal at " + std::to_string(v));
      }
    } catch (const std::exception& ex) {
      t.expect(false, tag + ": " + ex.what());
    }
  }
  return t.outcome("200 connectors connected, bipartite, minimal and containing S");
}

Outcome rope_suite() {
  Tally t;
  const auto gen = generate_rope(5, 7, 8);
  const auto verdict = verify_rope(gen.graph, gen.rope);
  t.expect(static_cast<bool>(verdict), "generated rope rejected: " + verdict.clause);
  // Independent audit of all 32 choice vectors.
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::vector<Vertex> cyc;
    for (int i = 0; i < 5; ++i) {
      const auto& p = gen.rope.segments[i].choose((mask >> i) & 1 ? 2 : 1);
      cyc.insert(cyc.end(), p.begin(), p.end() - 1);
    }
    const VertexSet cs = make_set(cyc);
    bool induced = cs.size() == cyc.size();
    for (Vertex v : cyc) {
      int deg = 0;
      for (Vertex u : cs) deg += gen.graph.adjacent(u, v);
      induced = induced && deg == 2;
    }
    t.expect(induced && oracle::connected_within(gen.graph, cs), "choice vector " + std::to_string(mask));
  }
  oracle::Rng rng(7007);
  int mutations = 0;
  std::uniform_int_distribution<int> pick(0, gen.graph.order() - 1);
  while (mutations < 50) {
    Graph m;
    std::string what;
    if (mutations % 2 == 0) {
      const auto edges = gen.graph.edges();
      const auto e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
      m = oracle::remove_edge(gen.graph, e.first, e.second);
      what = "deletion";
    } else {
      const Vertex a = pick(rng), b = pick(rng);
      if (a == b || gen.graph.adjacent(a, b) || !oracle::share_a_cycle(gen.rope, a, b)) continue;
      m = oracle::add_edge(gen.graph, a, b);
      what = "chord";
    }
    ++mutations;
    t.expect(!verify_rope(m, gen.rope), what + " mutation " + std::to_string(mutations) + " accepted");
  }
  const Graph comb = comb_shell_fixture();
  VertexSet all(comb.order());
  std::iota(all.begin(), all.end(), 0);
  try {
    const auto rope = find_rope(comb, all, 2);
    t.expect(static_cast<bool>(verify_rope(comb, rope)), "found rope fails verification");
  } catch (const std::exception& ex) {
    t.expect(false, std::string("find_rope: ") + ex.what());
  }
  const auto shell = generate_rope_shell(5, 7, 8);
  try {
    const auto w = extract_wheel_from_levelled_rope(shell.graph, 0, shell.rope);
    t.expect(static_cast<bool>(verify_wheel_witness(shell.graph, w)), "shell wheel witness");
  } catch (const std::exception& ex) {
    t.expect(false, std::string("shell wheel: ") + ex.what());
  }
  return t.outcome("32 choice vectors, 50 mutations rejected, relaxed find_rope verified");
}

bool audit_witness(const Graph& g, const StableGrading& gr, int c, const EarlierWitness& w, bool tf) {
  if (w.x.empty() || !oracle::connected_within(g, w.x)) return false;
  if (oracle::chromatic_number_of(g, w.x) < c) return false;
  if (!g.adjacent(w.u, w.v)) return false;
  const auto grade = grade_of(g, gr);
  bool u_hits = false, v_hits = false;
  for (Vertex x : w.x) {
    if (grade[w.u] >= grade[x] || grade[w.v] >= grade[x]) return false;
    u_hits |= g.adjacent(w.u, x);
    v_hits |= g.adjacent(w.v, x);
  }
  return tf ? (!u_hits && v_hits) : (u_hits || v_hits);
}

Graph triangle_free_four_chromatic(oracle::Rng& rng) {
  Graph g = oracle::shuffled(grotzsch(), rng);
  const int extra = std::uniform_int_distribution<int>(0, 3)(rng);
  std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
  const int n = g.order() + extra;
  g = Graph(n, edges);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < 12; ++k) {
    const Vertex a = pick(rng), b = pick(rng);
    if (a == b || g.adjacent(a, b)) continue;
    Graph trial = oracle::add_edge(g, a, b);
    if (!find_triangle(trial)) g = trial;
  }
  return g;
}

Outcome grading_witnesses() {
  Tally t;
  oracle::Rng rng(8008);
  int plain = 0, tf = 0;
  while (plain + tf < 1000) {
    if ((plain + tf) % 2 == 0) {
      const int n = std::uniform_int_distribution<int>(5, 14)(rng);
      const Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0.25, 0.65)(rng));
      const int chi = oracle::chromatic_number(g);
      if (chi < 3) continue;
      const int c = std::uniform_int_distribution<int>(1, chi - 2)(rng);
      const auto gr = oracle::random_grading(g, rng);
      ++plain;
      try {
        t.expect(audit_witness(g, gr, c, earlier_witness(g, gr, c), false), "plain case " + std::to_string(plain));
      } catch (const std::exception& ex) {
        t.expect(false, "plain case " + std::to_string(plain) + ": " + ex.what());
      }
    } else {
      const Graph g = triangle_free_four_chromatic(rng);
      if (oracle::chromatic_number(g) < 4) continue;
      const auto gr = oracle::random_grading(g, rng);
      ++tf;
      try {
        t.expect(audit_witness(g, gr, 1, earlier_witness_tf(g, gr, 1), true), "triangle-free case " + std::to_string(tf));
      } catch (const std::exception& ex) {
        t.expect(false, "triangle-free case " + std::to_string(tf) + ": " + ex.what());
      }
    }
  }
  return t.outcome(std::to_string(plain) + " plain and " + std::to_string(tf) + " triangle-free triples");
}

Outcome dichotomy() {
  Tally t;
  int colourings = 0, witnesses = 0;
  for (const auto& e : named_corpus()) {
    const bool tp = is_t_perfect(e.graph).holds;
    try {
      const Certificate cert = certify(e.graph);
      t.expect(static_cast<bool>(verify_certificate(e.graph, cert)), e.name + " certificate fails its audit");
      if (tp) {
        const auto* c = std::get_if<ColouringCertificate>(&cert);
        t.expect(c != nullptr, e.name + " is t-perfect but got a witness");
        if (c) {
          ++colourings;
          t.expect(c->colouring.count <= oracle::chromatic_number(e.graph) + 4, e.name + " uses too many colours");
        }
      } else {
        ++witnesses;
        t.expect(!std::holds_alternative<ColouringCertificate>(cert), e.name + " is not t-perfect but got a colouring");
      }
    } catch (const std::exception& ex) {
      t.expect(false, e.name + ": " + ex.what());
    }
  }
  return t.outcome(std::to_string(colourings) + " colourings and " + std::to_string(witnesses) + " witnesses verified");
}

Outcome hbar_bound() {
  Tally t;
  int graphs = 0;
  for (const auto& e : named_corpus()) {
    if (!is_hbar_perfect(e.graph).holds) continue;
    ++graphs;
    const Colouring c = hbar_colour(e.graph);
    const int omega = clique_number(e.graph);
    t.expect(static_cast<bool>(verify_colouring(e.graph, c)), e.name + " colouring improper");
    t.expect(c.count <= omega * (omega + 1) / 2, e.name + " uses " + std::to_string(c.count) + " colours");
  }
  t.expect(hbar_colour(cycle(5)).count == 3, "C5 not coloured with exactly 3");
  const Graph jc = make_named("joinC5C5");
  t.expect(hbar_colour(jc).count <= 10, "joinC5C5 above 10");
  t.expect(chi_exact(jc).chi == 6 && oracle::chromatic_number(jc) == 6, "chi(joinC5C5) != 6");
  return t.outcome(std::to_string(graphs) + " hbar-perfect graphs within the binomial bound, C5 tight");
}

Outcome thresholds() {
  Tally t;
  t.expect(induction_threshold(3) == 35, "6c+17 at c=3");
  t.expect(broken_rope_threshold(0, 7) == 7, "broken rope at r=0");
  for (int r = 1; r <= 6; ++r)
    for (int c = 1; c <= 5; ++c)
      t.expect(broken_rope_threshold(r, c) == 6 * broken_rope_threshold(r - 1, c) + 17, "broken rope recursion");
  t.expect(broken_rope_threshold(5, 3) == 49763, "broken rope at r=5, c=3");
  for (int r = 1; r <= 6; ++r) {
    // Finding a rope needs one level of chromatic number ceil(chi/2) that
    // carries the broken-rope threshold with c = 3.
    const Rational need = broken_rope_threshold(r, 3);
    t.expect(rope_finding_threshold(r) == 2 * need - 1, "rope finding vs broken rope at r=" + std::to_string(r));
  }
  t.expect(rope_finding_threshold(5) == 99525, "rope finding at r=5");
  const PipelineConstants pc;
  t.expect(pc.level_bound() == 99525 && (pc.technical + 1) / 2 == 99525, "ceil(199049/2)");
  t.expect(pc.total() == 199053, "199049 + 4");
  const long long triangle_free = pc.technical + 3;
  t.expect(triangle_free == 199052, "triangle-free bound");
  for (int omega = 2; omega <= 6; ++omega)
    t.expect((omega - 2) + triangle_free == omega + 199050, "omega + 199050 at omega=" + std::to_string(omega));
  return t.outcome("thresholds compose to 35, 49763, 99525, 199053, omega + 199050");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"polytope oracle fixtures", polytope_fixtures},
      {"4-criticality of fig1a and fig1b", four_critical},
      {"fractional chromatic number", fractional},
      {"odd girth reduction contract", odd_girth_reduction},
      {"odd wheel extraction", wheel_extraction},
      {"bipartite connector contract", bipartite_connector},
      {"rope suite", rope_suite},
      {"grading witnesses", grading_witnesses},
      {"colouring or witness dichotomy", dichotomy},
      {"hbar colouring bound", hbar_bound},
      {"threshold arithmetic", thresholds},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("uncaught: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char head[96];
    std::snprintf(head, sizeof head, "%s criterion %2zu (%6.2fs) ", o.pass ? "PASS" : "FAIL", i + 1, secs);
    std::cout << head << criteria[i].first << ": " << o.detail << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all 11 criteria passed") << std::endl;
  return failed ? 1 : 0;
}
