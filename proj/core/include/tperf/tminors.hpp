#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tperf/check.hpp"
#include "tperf/graph.hpp"

namespace tperf {

struct ArithmeticRope;

// One operation of a t-minor sequence, naming its vertex by label.
struct TMinorStep {
  enum class Kind { Delete, Contract };
  Kind kind = Kind::Delete;
  int label = 0;
  friend bool operator==(const TMinorStep&, const TMinorStep&) = default;
};

// Replayable t-minor derivation. `classes` maps each result label to the
// base labels merged into it.
struct TMinorTrace {
  std::uint64_t base_hash = 0;
  std::vector<TMinorStep> steps;
  Graph result;
  std::map<int, std::vector<int>> classes;
};

// FNV-1a over the label list and the labelled edge list.
std::uint64_t graph_hash(const Graph& g);

// Merges N[v] into one vertex that keeps v's label and is adjacent to
// N(N(v)) \ N[v]. Throws PreconditionError if N(v) is not stable.
Graph t_contract(const Graph& g, Vertex v);

// Empty trace on g.
TMinorTrace start_trace(const Graph& g);
// Applies one step to the trace result. Throws UnknownVertex or
// PreconditionError.
void apply_step(TMinorTrace& trace, const TMinorStep& step);
TMinorTrace replay(const Graph& base, const std::vector<TMinorStep>& steps);
// Replays from `base` and compares result, classes and hash.
CheckResult verify_trace(const Graph& base, const TMinorTrace& trace);

struct WheelShape {
  Vertex hub = 0;
  std::vector<Vertex> rim;  // cyclic order from the lowest rim vertex
};

// Hub and rim if g is W_k for odd k >= 3. The lowest eligible hub is chosen.
std::optional<WheelShape> is_odd_wheel(const Graph& g);

struct OddWheelWitness {
  TMinorTrace trace;
  int hub_label = 0;
  std::vector<int> rim_labels;
};

CheckResult verify_wheel_witness(const Graph& base, const OddWheelWitness& w);

// g must be an induced odd cycle plus one vertex v, where some three
// neighbours of v cut the cycle into odd paths. Repeatedly t-contracts the
// lowest-labelled rim vertex not adjacent to v.
OddWheelWitness extract_wheel_from_hub(const Graph& g, const std::vector<Vertex>& cycle, Vertex v);

// g - X connected bipartite with sides (a_side, b_side), a_side anticomplete
// to X, the rope inside X, and at least three anchors with a neighbour in
// b_side. Contracts every a_side vertex, keeps one suitable odd cycle of the
// rope and finishes with extract_wheel_from_hub.
OddWheelWitness extract_wheel_via_bipartite(const Graph& g, const VertexSet& x,
                                            const ArithmeticRope& rope, const VertexSet& a_side,
                                            const VertexSet& b_side);

// A connected induced bipartite subgraph containing s, minimal among
// connected supersets of s. Requires g connected, odd girth >= 2*param + 1,
// s stable and |s| <= 2*param.
VertexSet connected_bipartite_containing(const Graph& g, const VertexSet& s, int param);

// Given a rope lying in one BFS level around `root`, builds the bipartite
// connector through the lower levels and extracts an odd wheel. Needs at
// least three anchors and level >= 3.
OddWheelWitness extract_wheel_from_levelled_rope(const Graph& g, Vertex root,
                                                 const ArithmeticRope& rope);

struct SearchBudget {
  std::size_t nodes = 200'000;
};

// Bounded search. A returned witness has been verified; absence proves
// nothing.
std::optional<OddWheelWitness> find_odd_wheel_tminor(const Graph& g, const SearchBudget& budget = {},
                                                     const Caps& caps = {});

}  // namespace tperf
