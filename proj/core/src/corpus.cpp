#include "tperf/corpus.hpp"

#include <json.hpp>
#include <random>
#include <regex>

#include "tperf/error.hpp"

namespace tperf {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

Graph cycle(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  require(n >= 0, "negative order");
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph wheel(int k) {
  require(k >= 3, "wheel needs a rim of at least 3 vertices");
  EdgeList e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(i, k);
  }
  return Graph(k + 1, e);
}

Graph star(int k) {
  require(k >= 0, "negative leaf count");
  EdgeList e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  return Graph(k + 1, e);
}

Graph path(int n) {
  require(n >= 1, "path needs a vertex");
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph petersen() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

Graph grotzsch() { return mycielski(cycle(5)); }

Graph moebius_ladder(int k) {
  require(k >= 2, "moebius ladder needs at least 2 rungs");
  EdgeList e;
  for (int i = 0; i < 2 * k; ++i) e.emplace_back(i, (i + 1) % (2 * k));
  for (int i = 0; i < k; ++i) e.emplace_back(i, i + k);
  return Graph(2 * k, e);
}

Graph series_parallel_random(std::uint64_t seed, int n) {
  require(n >= 2, "series-parallel graph needs at least 2 vertices");
  std::mt19937_64 rng(seed);
  EdgeList e{{0, 1}};
  for (int v = 2; v < n; ++v) {
    auto [a, b] = e[std::uniform_int_distribution<std::size_t>(0, e.size() - 1)(rng)];
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0:  // series: subdivide ab
        e.erase(std::find(e.begin(), e.end(), std::make_pair(a, b)));
        e.emplace_back(a, v);
        e.emplace_back(b, v);
        break;
      case 1:  // parallel: a second a-b route of length 2
        e.emplace_back(a, v);
        e.emplace_back(b, v);
        break;
      default:  // pendant edge
        e.emplace_back(a, v);
        break;
    }
  }
  return Graph(n, e);
}

Graph complement(const Graph& g) {
  EdgeList e;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(std::vector<int>(g.labels().begin(), g.labels().end()), e);
}

Graph line_graph(const Graph& g) {
  auto edges = g.edges();
  EdgeList e;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  return Graph(static_cast<int>(edges.size()), e);
}

Graph mycielski(const Graph& g) {
  const int n = g.order();
  EdgeList e;
  for (auto [u, v] : g.edges()) {
    e.emplace_back(u, v);
    e.emplace_back(u, n + v);
    e.emplace_back(v, n + u);
  }
  for (int i = 0; i < n; ++i) e.emplace_back(n + i, 2 * n);
  return Graph(2 * n + 1, e);
}

Graph join(const Graph& a, const Graph& b) {
  const int n = a.order();
  EdgeList e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(n + u, n + v);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < b.order(); ++v) e.emplace_back(u, n + v);
  return Graph(n + b.order(), e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order();
  EdgeList e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(n + u, n + v);
  return Graph(n + b.order(), e);
}

Graph fig1a() { return complement(line_graph(complement(cycle(6)))); }
Graph fig1b() { return complement(line_graph(wheel(5))); }

Graph fig1a_drawn() {
  // Triangles v_i u_i w_i; every u is adjacent to every v; w_0 w_1 w_2 is a
  // triangle. Indices: v_i = i, u_i = 3 + i, w_i = 6 + i.
  EdgeList e;
  for (int i = 0; i < 3; ++i) {
    e.emplace_back(i, 6 + i);
    e.emplace_back(3 + i, 6 + i);
    for (int j = 0; j < 3; ++j) e.emplace_back(i, 3 + j);
    e.emplace_back(6 + i, 6 + (i + 1) % 3);
  }
  return Graph(9, e);
}

Graph fig1b_drawn() {
  // Outer v_0..v_4 with pentagram chords, inner w_0..w_4 on spokes, and the
  // closed chain v0 w1 v2 w3 v4 w0 v1 w2 v3 w4. v_i = i, w_i = 5 + i.
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, 5 + i);
    e.emplace_back(i, (i + 2) % 5);
  }
  const int chain[] = {0, 6, 2, 8, 4, 5, 1, 7, 3, 9};
  for (int i = 0; i < 10; ++i) e.emplace_back(chain[i], chain[(i + 1) % 10]);
  return Graph(10, e);
}

Graph make_named(const std::string& name) {
  static const std::regex family(R"((C|K|P|W|S|antiC|moebius|mycielski)(\d+))");
  static const std::regex sp(R"(sp_(\d+)_(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, family)) {
    const std::string f = m[1];
    const int k = std::stoi(m[2]);
    require(k <= 4096, "fixture parameter too large");
    if (f == "C") return cycle(k);
    if (f == "K") return complete(k);
    if (f == "P") return path(k);
    if (f == "W") return wheel(k);
    if (f == "S") return star(k);
    if (f == "antiC") return complement(cycle(k));
    if (f == "moebius") return moebius_ladder(k);
    require(k >= 2 && k <= 12, "mycielski index must be between 2 and 12");
    Graph g = complete(2);
    for (int i = 2; i < k; ++i) g = mycielski(g);
    return g;
  }
  if (std::regex_match(name, m, sp)) return series_parallel_random(std::stoull(m[1]), std::stoi(m[2]));
  if (name == "petersen") return petersen();
  if (name == "grotzsch") return grotzsch();
  if (name == "fig1a") return fig1a();
  if (name == "fig1b") return fig1b();
  if (name == "fig1a_drawn") return fig1a_drawn();
  if (name == "fig1b_drawn") return fig1b_drawn();
  if (name == "prism") return complement(cycle(6));
  if (name == "joinC5C5") return join(cycle(5), cycle(5));
  if (name == "K3pendant") {
    const EdgeList e{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    return Graph(4, e);
  }
  throw PreconditionError("unknown corpus graph '" + name + "'");
}

const std::vector<NamedGraph>& named_corpus() {
  static const std::vector<NamedGraph> corpus = [] {
    std::vector<NamedGraph> out;
    auto add = [&](std::string name, std::string description, std::optional<bool> t,
                   std::optional<bool> h, std::optional<bool> hbar, std::optional<int> chi,
                   std::string source) {
      Graph g = make_named(name);
      out.push_back({std::move(name), std::move(description), std::move(g), t, h, hbar, chi,
                     std::move(source)});
    };
    const std::nullopt_t unknown = std::nullopt;
    for (int n = 3; n <= 11; ++n)
      add("C" + std::to_string(n), "cycle", true, true,
          n <= 6 ? std::optional<bool>(true) : n % 2 ? std::optional<bool>(false) : unknown,
          n % 2 ? 3 : 2, n % 2 && n >= 7 ? "literature" : "construction");
    add("K4", "complete graph, W3", false, true, true, 4, "literature");
    add("K5", "complete graph", false, true, true, 5, "construction");
    add("W4", "even wheel", true, true, unknown, 3, "computed");
    add("W5", "odd wheel", false, false, unknown, 4, "literature");
    add("W7", "odd wheel", false, false, unknown, 4, "literature");
    add("P5", "path", true, true, unknown, 2, "construction");
    add("S3", "claw", true, true, unknown, 2, "construction");
    add("K3pendant", "triangle with a pendant vertex", true, true, unknown, 3, "construction");
    add("prism", "complement of C6", true, true, true, 3, "construction");
    add("antiC7", "complement of C7", false, false, unknown, 4, "literature");
    add("joinC5C5", "two completely joined copies of C5", false, unknown, true, 6, "literature");
    add("petersen", "Petersen graph", unknown, unknown, unknown, 3, "construction");
    add("grotzsch", "Mycielski graph of C5", unknown, unknown, unknown, 4, "construction");
    add("fig1a", "complement of the line graph of the complement of C6", true, true, unknown, 4,
        "literature");
    add("fig1b", "complement of the line graph of W5", true, true, unknown, 4, "literature");
    for (int k = 3; k <= 6; ++k)
      add("moebius" + std::to_string(k), "Moebius ladder", unknown, unknown, unknown, unknown,
          "computed");
    add("sp_1_10", "random series-parallel graph", true, true, unknown, unknown, "literature");
    add("sp_2_12", "random series-parallel graph", true, true, unknown, unknown, "literature");
    add("sp_3_9", "random series-parallel graph", true, true, unknown, unknown, "literature");
    return out;
  }();
  return corpus;
}

std::string corpus_manifest_json() {
  nlohmann::json doc = nlohmann::json::array();
  auto opt = [](const auto& v) -> nlohmann::json {
    if (v) return *v;
    return nullptr;
  };
  for (const auto& f : named_corpus()) {
    doc.push_back({{"name", f.name},
                   {"description", f.description},
                   {"n", f.graph.order()},
                   {"m", f.graph.size()},
                   {"expected",
                    {{"t_perfect", opt(f.t_perfect)},
                     {"h_perfect", opt(f.h_perfect)},
                     {"hbar_perfect", opt(f.hbar_perfect)},
                     {"chromatic_number", opt(f.chromatic_number)}}},
                   {"source", f.source}});
  }
  return doc.dump(2);
}

}  // namespace tperf
