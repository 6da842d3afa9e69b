#pragma once

#include <string>
#include <string_view>

#include "tperf/colouring.hpp"
#include "tperf/graph.hpp"
#include "tperf/polytopes.hpp"
#include "tperf/ropes.hpp"
#include "tperf/tminors.hpp"

namespace tperf {

enum class GraphFormat { Auto, Graph6, EdgeList, Json };

GraphFormat parse_graph_format(const std::string& name);

// graph6 with labels 0..n-1. An optional ">>graph6<<" header and trailing
// newline are accepted on input and never written.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

// Optional "n N" line, then one "u v" pair per line (0-based). '#' starts a
// comment. Without the header the order is one more than the largest
// endpoint. Written with the header, edges in lexicographic order.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::string_view text);

// {"n": N, "labels": [...], "adjacency": [[...], ...]}; "labels" is
// optional on input and adjacency lists use vertex indices.
std::string write_graph_json(const Graph& g);
Graph read_graph_json(std::string_view text);

// Auto picks JSON for text starting with '{', edge list when the first
// non-comment line holds whitespace, graph6 otherwise.
Graph read_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

// Certificate documents. Vertices are named by label except for polytope
// points and rows, which are indexed like the graph's vertices. Every
// document carries a "kind" field; see docs/certificate-schema.md.
std::string to_json(const Graph& g, const Certificate& cert, int indent = 2);
std::string to_json(const Graph& g, const ImperfectionWitness& w, int indent = 2);
std::string to_json(const Graph& g, const OddWheelWitness& w, int indent = 2);
std::string to_json(const Graph& g, const ArithmeticRope& rope, int indent = 2);
std::string to_json(const Graph& g, const FractionalColouring& f, int indent = 2);
std::string to_json(const TMinorTrace& trace, int indent = 2);

// Any document produced above, decoded against the graph it names.
using Document = std::variant<ColouringCertificate, ImperfectionWitness, OddWheelWitness, ArithmeticRope,
                              FractionalColouring, TMinorTrace>;
Document parse_document(const Graph& g, std::string_view text);
// Runs the matching verifier.
CheckResult verify_document(const Graph& g, const Document& doc, const Caps& caps = {});

}  // namespace tperf
