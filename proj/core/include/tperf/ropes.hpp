#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tperf/check.hpp"
#include "tperf/error.hpp"
#include "tperf/graph.hpp"
#include "tperf/rational.hpp"

namespace tperf {

// Ordered partition of the vertex set into stable classes. Empty classes are
// allowed so that class indices can follow an external ordering.
struct StableGrading {
  std::vector<VertexSet> classes;
};

CheckResult verify_grading(const Graph& g, const StableGrading& grading);
// Class index of every vertex.
std::vector<int> grade_of(const Graph& g, const StableGrading& grading);

// The two parallel paths between consecutive anchors; `odd` has odd length,
// `even` has even length. Both run from the earlier anchor to the later one.
struct RopeSegment {
  std::vector<Vertex> odd;
  std::vector<Vertex> even;
  const std::vector<Vertex>& choose(int h) const { return h == 1 ? odd : even; }
};

// Segment i joins anchors[i] to anchors[(i + 1) % r].
struct ArithmeticRope {
  std::vector<Vertex> anchors;
  std::vector<RopeSegment> segments;
  int r() const { return static_cast<int>(anchors.size()); }
};

// Segment i joins anchors[i] to anchors[i + 1]; anchors.back() is the end.
struct BrokenRope {
  std::vector<Vertex> anchors;
  std::vector<RopeSegment> segments;
  int r() const { return static_cast<int>(segments.size()); }
};

// Result of a rope audit: the first violated clause ("shape", "parity",
// "induced-cycle", "induced-path" or "distance") and what violated it.
struct RopeVerdict {
  bool ok = true;
  std::string clause;
  std::string detail;
  explicit operator bool() const { return ok; }
};

RopeVerdict verify_rope(const Graph& g, const ArithmeticRope& rope);
RopeVerdict verify_rope(const Graph& g, const BrokenRope& rope);

// Anchors 0..r-1, then for each segment the odd interior followed by the
// even interior. Throws PreconditionError on bad parameters or if the result
// does not verify.
struct GeneratedRope {
  Graph graph;
  ArithmeticRope rope;
};
GeneratedRope generate_rope(int r, int odd_len, int even_len);

// The generated rope with a new root (index 0, all other indices shifted
// by one) joined to every rope vertex by a private path of `depth` edges.
GeneratedRope generate_rope_shell(int r, int odd_len, int even_len, int depth = 5);

// Layered host on which the relaxed rope finder succeeds for r = 2: two
// nested combs hanging off a private-path shell around root 0.
Graph comb_shell_fixture();

struct EarlierWitness {
  VertexSet x;
  Vertex u = 0;
  Vertex v = 0;
};

// Left-active construction. The returned v is the end with a neighbour in
// x. With check_precondition, throws PreconditionError unless chi >= c + 2;
// without, throws RopeFailure if the construction does not apply.
EarlierWitness earlier_witness(const Graph& g, const StableGrading& grading, int c,
                               bool check_precondition = true);
// As above for triangle-free g with chi >= c + 3; u has no neighbour in x.
EarlierWitness earlier_witness_tf(const Graph& g, const StableGrading& grading, int c,
                                  bool check_precondition = true);
CheckResult audit_earlier_witness(const Graph& g, const StableGrading& grading, int c,
                                  const EarlierWitness& w, bool triangle_free_form);

// In strict mode the chromatic thresholds are checked before anything is
// built; in relaxed mode every branch is attempted and success means the
// output passed its audit. `c` is the chromatic target of the audits.
struct Thresholds {
  bool strict = false;
  int c = 1;
};

// Exact threshold formulas.
Rational induction_threshold(int c);                // 6c + 17
Rational broken_rope_threshold(int r, int c);       // 6^r c + (17/5)(6^r - 1)
Rational rope_finding_threshold(int r);             // 6^{r+1} + (34/5)(6^r - 1) - 1

// Colour budget of the top-level pipeline: `technical` colours suffice once
// the odd girth is at least 2*rounds + 3, and each reduction round adds one.
struct PipelineConstants {
  long long technical = 199049;
  int rounds = 4;
  long long total() const { return technical + rounds; }
  // ceil(technical / 2): chromatic number forced into one BFS level.
  long long level_bound() const { return (technical + 1) / 2; }
};

class RopeFailure : public Error {
 public:
  RopeFailure(std::string stage, const std::string& what, int depth = 0)
      : Error(stage + ": " + what), stage_(std::move(stage)), depth_(depth) {}
  const std::string& stage() const { return stage_; }
  int depth() const { return depth_; }

 private:
  std::string stage_;
  int depth_;
};

class ThresholdUnmet : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct InductionStep {
  VertexSet b_next;
  VertexSet c_next;
  Vertex q_next = 0;
  std::vector<Vertex> even_path;  // q ... q_next
  std::vector<Vertex> odd_path;
  std::string branch;              // "C0", "C1" or "C2"
};

InductionStep rope_induction_step(const Graph& g, const VertexSet& b, const VertexSet& c, Vertex q,
                                  const Thresholds& th = {}, const Caps& caps = {});
CheckResult audit_induction_step(const Graph& g, const VertexSet& b, const VertexSet& c, Vertex q,
                                 int target, const InductionStep& step);

struct BrokenRopeResult {
  VertexSet b_next;
  VertexSet c_next;
  BrokenRope rope;
};

BrokenRopeResult build_broken_rope(const Graph& g, const VertexSet& b, const VertexSet& c, Vertex q1,
                                   int r, const Thresholds& th = {}, const Caps& caps = {});
CheckResult audit_broken_rope(const Graph& g, const VertexSet& b, const VertexSet& c, int target,
                              const BrokenRopeResult& result);

ArithmeticRope find_rope(const Graph& g, const VertexSet& x, int r, const Thresholds& th = {},
                         const Caps& caps = {});

}  // namespace tperf
