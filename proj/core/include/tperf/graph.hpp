#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tperf {

// Dense vertex index into a Graph. Indices are renumbered by every operation
// that produces a new graph; labels are not.
using Vertex = int;

// Sorted, duplicate-free list of vertex indices of one graph.
using VertexSet = std::vector<Vertex>;

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Stand-in for an infinite odd girth or an unreachable distance.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Size limits for the exponential routines.
struct Caps {
  int combinatorial = 512;  // exact colouring, clique search, t-minor search
  int polytope = 16;        // vertex enumeration of stable set relaxations
  int fractional = 24;      // enumeration of all maximal stable sets
};

// Immutable simple undirected graph. Each vertex carries an integer label that
// survives induced subgraphs and contractions, so certificates can always
// name vertices of the graph the user handed in.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  // Labels must be pairwise distinct. Parallel edges are merged; loops throw.
  Graph(std::vector<int> labels, std::span<const std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  std::size_t size() const { return m_; }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u][v]; }
  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const Bitset& row(Vertex v) const { return rows_[v]; }

  int label(Vertex v) const { return labels_[v]; }
  std::span<const int> labels() const { return labels_; }
  std::optional<Vertex> find_label(int label) const;
  // Throws UnknownVertex.
  Vertex vertex_of(int label) const;

  // Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<int> labels_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bitset> rows_;
};

// BFS levels L_0 = {root}, L_1, ... of the component of `root`.
struct Levelling {
  Vertex root = 0;
  std::vector<VertexSet> levels;
  std::vector<int> level_of;  // -1 outside the component
  int depth() const { return static_cast<int>(levels.size()) - 1; }
};

// Throws UnknownVertex unless every member is a vertex of g.
void check_vertex(const Graph& g, Vertex v);
void check_vertices(const Graph& g, std::span<const Vertex> s);
VertexSet make_set(std::vector<Vertex> vertices);
Bitset to_bitset(const Graph& g, std::span<const Vertex> s);
VertexSet from_bitset(const Bitset& b);

bool is_stable(const Graph& g, std::span<const Vertex> s);
bool is_clique(const Graph& g, std::span<const Vertex> s);
// b and c are disjoint and every vertex of c has a neighbour in b.
bool covers(const Graph& g, std::span<const Vertex> b, std::span<const Vertex> c);
bool is_anticomplete(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y);
// Vertices outside s with a neighbour in s.
VertexSet neighbourhood(const Graph& g, std::span<const Vertex> s);

// Distances from v inside g[allowed] (all vertices when `allowed` is empty);
// -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex v, const Bitset* allowed = nullptr);
int distance(const Graph& g, Vertex u, Vertex v);
// A shortest u-v path inside g[allowed], lowest-index parents first.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u, Vertex v,
                                                 const Bitset* allowed = nullptr);
// N^r[v]: vertices at distance at most r from v.
VertexSet ball(const Graph& g, Vertex v, int r);

Levelling bfs_levelling(const Graph& g, Vertex v);

// Length of a shortest odd cycle, kInfinity for bipartite graphs. Computed by
// BFS in the bipartite double cover from every vertex.
int odd_girth(const Graph& g);
// A shortest odd cycle as a cyclic vertex sequence.
std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g);

bool ball_chromatic_check(const Graph& g, Vertex v, int r);

// The induced subgraph keeps the labels of the kept vertices; index i of the
// result is the i-th smallest member of s.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);
Graph delete_vertices(const Graph& g, std::span<const Vertex> s);

std::vector<VertexSet> connected_components(const Graph& g);
// Components of g[s], reported in indices of g.
std::vector<VertexSet> components_within(const Graph& g, std::span<const Vertex> s);
bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, std::span<const Vertex> s);

// Two colour classes, or nothing if g has an odd cycle. Each component puts
// its lowest vertex in the first class.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

// All induced u-v paths with at most max_length edges.
std::vector<std::vector<Vertex>> induced_paths(const Graph& g, Vertex u, Vertex v,
                                               int max_length);

// Chordless cycles (each once, starting at its smallest vertex, second vertex
// smaller than the last). Includes triangles.
std::vector<std::vector<Vertex>> chordless_cycles(const Graph& g, bool odd_only);
// All simple cycles; throws CapExceeded beyond `limit` cycles.
std::vector<std::vector<Vertex>> simple_cycles(const Graph& g, bool odd_only,
                                               std::size_t limit = 2'000'000);

// Bron-Kerbosch with pivoting. Cliques are sorted and listed lexicographically.
std::vector<VertexSet> maximal_cliques(const Graph& g);
std::vector<VertexSet> maximal_stable_sets(const Graph& g);
int clique_number(const Graph& g);
VertexSet maximum_stable_set(const Graph& g);
std::vector<VertexSet> all_stable_sets(const Graph& g);
std::optional<std::vector<Vertex>> find_triangle(const Graph& g);

// Isomorphism by degree refinement and backtracking; meant for small graphs.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace tperf
