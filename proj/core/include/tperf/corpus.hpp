#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tperf/graph.hpp"

namespace tperf {

// Constructors. Vertices are numbered 0..n-1 with label = index.
Graph cycle(int n);
Graph complete(int n);
// Rim 0..k-1 in cyclic order, hub k.
Graph wheel(int k);
// Centre 0, leaves 1..k.
Graph star(int k);
// n vertices, n-1 edges.
Graph path(int n);
Graph petersen();
Graph grotzsch();
// Cycle on 2k vertices plus the k long diagonals.
Graph moebius_ladder(int k);
// Grown from one edge by random subdivisions and parallel 2-paths, so the
// result has no K4 minor. Deterministic in (seed, n).
Graph series_parallel_random(std::uint64_t seed, int n);

// complement(line_graph(complement(C6))) and complement(line_graph(W5)).
Graph fig1a();
Graph fig1b();
// Same two graphs, transcribed edge by edge from their drawings.
Graph fig1a_drawn();
Graph fig1b_drawn();

// Operators. complement keeps labels; the others relabel 0..n-1.
Graph complement(const Graph& g);
// Vertex i is the i-th edge of g in lexicographic order.
Graph line_graph(const Graph& g);
// Copies 0..n-1, shadows n..2n-1, apex 2n.
Graph mycielski(const Graph& g);
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

// A corpus fixture and what is known about it. `source` says where each
// expectation comes from: "literature", "construction" or "computed".
struct NamedGraph {
  std::string name;
  std::string description;
  Graph graph;
  std::optional<bool> t_perfect;
  std::optional<bool> h_perfect;
  std::optional<bool> hbar_perfect;
  std::optional<int> chromatic_number;
  std::string source;
};

// The fixed corpus used by the acceptance suite and `corpus list`.
const std::vector<NamedGraph>& named_corpus();

// Resolves a fixture name: every entry of named_corpus() plus the families
// C<n>, K<n>, P<n>, W<k>, S<k> (star), antiC<n>, moebius<k>, mycielski<k>
// (chromatic number k, iterated from K2), sp_<seed>_<n>. Throws PreconditionError if unknown.
Graph make_named(const std::string& name);

// JSON manifest of named_corpus() with the expectations and their sources.
std::string corpus_manifest_json();

}  // namespace tperf
