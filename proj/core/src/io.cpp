#include "tperf/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "tperf/error.hpp"

namespace tperf {

using nlohmann::json;

namespace {

std::vector<int> labels_of(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<int> out;
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

std::vector<Vertex> vertices_of(const Graph& g, const json& labels) {
  std::vector<Vertex> out;
  for (const auto& l : labels) out.push_back(g.vertex_of(l.get<int>()));
  return out;
}

json rationals(const QVec& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

QVec rationals_from(const json& j) {
  QVec out;
  for (const auto& q : j) out.push_back(parse_rational(q.get<std::string>()));
  return out;
}

json graph_json(const Graph& g) {
  json adj = json::array();
  for (Vertex v = 0; v < g.order(); ++v) adj.push_back(std::vector<int>(g.neighbours(v).begin(), g.neighbours(v).end()));
  return {{"n", g.order()}, {"labels", std::vector<int>(g.labels().begin(), g.labels().end())}, {"adjacency", adj}};
}

Graph graph_from(const json& j) {
  const int n = j.at("n").get<int>();
  if (n < 0) throw ParseError("negative vertex count", 0);
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<int>>();
  if (static_cast<int>(labels.size()) != n) throw ParseError("label list has the wrong length", 0);
  const auto& adj = j.at("adjacency");
  if (static_cast<int>(adj.size()) != n) throw ParseError("adjacency list has the wrong length", 0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 0; v < n; ++v)
    for (const auto& u : adj[v]) {
      const int w = u.get<int>();
      if (w < 0 || w >= n) throw ParseError("adjacency names vertex " + std::to_string(w), 0);
      if (w == v) throw ParseError("loop at vertex " + std::to_string(v), 0);
      edges.emplace_back(std::min(v, w), std::max(v, w));
    }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); i += 2)
    if (i + 1 == edges.size() || edges[i] != edges[i + 1])
      throw ParseError("adjacency is not symmetric at edge " + std::to_string(edges[i].first) + "-" +
                           std::to_string(edges[i].second),
                       0);
  return Graph(labels, edges);
}

json trace_json(const TMinorTrace& t) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(t.base_hash));
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"op", s.kind == TMinorStep::Kind::Delete ? "delete" : "contract"}, {"vertex", s.label}});
  json classes = json::array();
  for (const auto& [label, members] : t.classes) classes.push_back({{"vertex", label}, {"merged", members}});
  return {{"kind", "trace"}, {"base_hash", hash}, {"steps", steps}, {"result", graph_json(t.result)},
          {"classes", classes}};
}

TMinorTrace trace_from(const json& j) {
  TMinorTrace t;
  t.base_hash = std::stoull(j.at("base_hash").get<std::string>(), nullptr, 16);
  for (const auto& s : j.at("steps")) {
    const auto op = s.at("op").get<std::string>();
    if (op != "delete" && op != "contract") throw ParseError("unknown trace step '" + op + "'", 0);
    t.steps.push_back({op == "delete" ? TMinorStep::Kind::Delete : TMinorStep::Kind::Contract,
                       s.at("vertex").get<int>()});
  }
  t.result = graph_from(j.at("result"));
  for (const auto& c : j.at("classes")) t.classes[c.at("vertex").get<int>()] = c.at("merged").get<std::vector<int>>();
  return t;
}

json witness_json(const ImperfectionWitness& w) {
  json tight = json::array();
  for (const auto& row : w.tight)
    tight.push_back({{"kind", to_string(row.kind)}, {"support", row.support}, {"coeffs", rationals(row.coeffs)},
                     {"rhs", to_string(row.rhs)}});
  return {{"kind", "imperfection"}, {"relaxation", to_string(w.relaxation)}, {"complemented", w.complemented},
          {"point", rationals(w.point)}, {"tight", tight}};
}

ImperfectionWitness witness_from(const json& j) {
  ImperfectionWitness w;
  w.relaxation = parse_polytope_kind(j.at("relaxation").get<std::string>());
  w.complemented = j.at("complemented").get<bool>();
  w.point = rationals_from(j.at("point"));
  for (const auto& row : j.at("tight"))
    w.tight.push_back({rationals_from(row.at("coeffs")), parse_rational(row.at("rhs").get<std::string>()),
                       parse_row_kind(row.at("kind").get<std::string>()), row.at("support").get<std::vector<int>>()});
  return w;
}

json wheel_json(const OddWheelWitness& w) {
  return {{"kind", "odd-wheel"}, {"hub", w.hub_label}, {"rim", w.rim_labels}, {"trace", trace_json(w.trace)}};
}

json colouring_json(const Graph& g, const ColouringCertificate& c) {
  json assignment = json::array();
  for (Vertex v = 0; v < g.order(); ++v) assignment.push_back({g.label(v), c.colouring.colour[v]});
  json classes = json::array();
  for (const auto& cls : c.reduction_classes) classes.push_back(labels_of(g, cls));
  return {{"kind", "colouring"}, {"colours", c.colouring.count}, {"assignment", assignment},
          {"reduction_classes", classes}};
}

ColouringCertificate colouring_from(const Graph& g, const json& j) {
  ColouringCertificate c;
  c.colouring.count = j.at("colours").get<int>();
  c.colouring.colour.assign(g.order(), -1);
  for (const auto& pair : j.at("assignment")) c.colouring.colour[g.vertex_of(pair.at(0).get<int>())] = pair.at(1).get<int>();
  for (const auto& cls : j.at("reduction_classes")) c.reduction_classes.push_back(make_set(vertices_of(g, cls)));
  return c;
}

json rope_json(const Graph& g, const ArithmeticRope& r) {
  json segs = json::array();
  for (const auto& s : r.segments) segs.push_back({{"odd", labels_of(g, s.odd)}, {"even", labels_of(g, s.even)}});
  return {{"kind", "rope"}, {"anchors", labels_of(g, r.anchors)}, {"segments", segs}};
}

json fractional_json(const Graph& g, const FractionalColouring& f) {
  json sets = json::array();
  for (const auto& w : f.sets) sets.push_back({{"set", labels_of(g, w.set)}, {"weight", to_string(w.weight)}});
  return {{"kind", "fractional-colouring"}, {"total", to_string(f.total)}, {"sets", sets}};
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

std::size_t line_offset(std::string_view text, std::size_t pos) {
  return static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n')) + 1;
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "auto") return GraphFormat::Auto;
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "edge-list" || name == "edges") return GraphFormat::EdgeList;
  if (name == "json") return GraphFormat::Json;
  throw PreconditionError("unknown graph format '" + name + "'");
}

std::string encode_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  auto put_bits = [&](unsigned long long value, int groups) {
    for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(((value >> (6 * k)) & 63) + 63));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    put_bits(n, 3);
  } else {
    out.push_back(126);
    out.push_back(126);
    put_bits(n, 6);
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  auto byte = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError("graph6 string ends early", at);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte " + std::to_string(c) + " is outside 63..126", at);
    return c - 63;
  };
  long long n = 0;
  if (byte(pos) < 63) {
    n = byte(pos++);
  } else if (pos + 1 < text.size() && byte(pos + 1) < 63) {
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte(pos++);
  } else {
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | byte(pos++);
  }
  if (n > 1'000'000) throw ParseError("graph6 order " + std::to_string(n) + " is too large", pos);
  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need)
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(need),
                     std::min(text.size(), pos + need));
  std::vector<std::pair<Vertex, Vertex>> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((byte(pos + k / 6) >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
  if (bits % 6 != 0) {
    const int tail = byte(pos + need - 1);
    if (tail & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6 padding bits are not zero", pos + need - 1);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph read_edge_list(std::string_view text) {
  std::optional<int> order;
  std::vector<std::pair<Vertex, Vertex>> edges;
  int largest = -1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    const std::size_t line_no = line_offset(text, start);
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string first;
    if (in >> first) {
      if (first == "n") {
        long long n;
        if (!(in >> n) || n < 0 || edges.size() || order) throw ParseError("malformed order line", line_no);
        order = static_cast<int>(n);
      } else {
        long long u, v;
        std::string extra;
        std::istringstream pair(line);
        if (!(pair >> u >> v) || (pair >> extra) || u < 0 || v < 0)
          throw ParseError("expected two non-negative vertex numbers", line_no);
        if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_no);
        if (order && std::max(u, v) >= *order)
          throw ParseError("vertex " + std::to_string(std::max(u, v)) + " exceeds the declared order", line_no);
        largest = static_cast<int>(std::max<long long>({largest, u, v}));
        edges.emplace_back(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
      }
    }
    start = end + 1;
  }
  return Graph(order ? *order : largest + 1, edges);
}

std::string write_graph_json(const Graph& g) { return graph_json(g).dump(); }

Graph read_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  try {
    return graph_from(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what(), 0);
  }
}

Graph read_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) format = GraphFormat::EdgeList;
    else if (text[first] == '{') format = GraphFormat::Json;
    else if (text[first] == '#') format = GraphFormat::EdgeList;
    else {
      auto end = text.find('\n', first);
      auto line = text.substr(first, end == std::string_view::npos ? std::string_view::npos : end - first);
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
      format = line.find_first_of(" \t") != std::string_view::npos ? GraphFormat::EdgeList : GraphFormat::Graph6;
    }
  }
  switch (format) {
    case GraphFormat::Json: return read_graph_json(text);
    case GraphFormat::EdgeList: return read_edge_list(text);
    default: {
      const auto first = text.find_first_not_of(" \t\r\n");
      return decode_graph6(first == std::string_view::npos ? text : text.substr(first));
    }
  }
}

std::string to_json(const Graph& g, const Certificate& cert, int indent) {
  if (const auto* c = std::get_if<ColouringCertificate>(&cert)) return dump(colouring_json(g, *c), indent);
  if (const auto* w = std::get_if<ImperfectionWitness>(&cert)) return dump(witness_json(*w), indent);
  return dump(wheel_json(std::get<OddWheelWitness>(cert)), indent);
}

std::string to_json(const Graph&, const ImperfectionWitness& w, int indent) { return dump(witness_json(w), indent); }
std::string to_json(const Graph&, const OddWheelWitness& w, int indent) { return dump(wheel_json(w), indent); }
std::string to_json(const Graph& g, const ArithmeticRope& r, int indent) { return dump(rope_json(g, r), indent); }
std::string to_json(const Graph& g, const FractionalColouring& f, int indent) {
  return dump(fractional_json(g, f), indent);
}
std::string to_json(const TMinorTrace& t, int indent) { return dump(trace_json(t), indent); }

Document parse_document(const Graph& g, std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "colouring") return colouring_from(g, j);
    if (kind == "imperfection") return witness_from(j);
    if (kind == "odd-wheel")
      return OddWheelWitness{trace_from(j.at("trace")), j.at("hub").get<int>(), j.at("rim").get<std::vector<int>>()};
    if (kind == "trace") return trace_from(j);
    if (kind == "rope") {
      ArithmeticRope r;
      r.anchors = vertices_of(g, j.at("anchors"));
      for (const auto& s : j.at("segments")) r.segments.push_back({vertices_of(g, s.at("odd")), vertices_of(g, s.at("even"))});
      return r;
    }
    if (kind == "fractional-colouring") {
      FractionalColouring f;
      f.total = parse_rational(j.at("total").get<std::string>());
      for (const auto& s : j.at("sets"))
        f.sets.push_back({make_set(vertices_of(g, s.at("set"))), parse_rational(s.at("weight").get<std::string>())});
      return f;
    }
    throw ParseError("unknown document kind '" + kind + "'", 0);
  } catch (const json::exception& e) {
    throw ParseError(std::string("document: ") + e.what(), 0);
  }
}

CheckResult verify_document(const Graph& g, const Document& doc, const Caps& caps) {
  return std::visit(
      [&](const auto& d) -> CheckResult {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ColouringCertificate>) return verify_certificate(g, Certificate{d}, caps);
        else if constexpr (std::is_same_v<T, ImperfectionWitness>) return verify_witness(g, d, caps);
        else if constexpr (std::is_same_v<T, OddWheelWitness>) return verify_wheel_witness(g, d);
        else if constexpr (std::is_same_v<T, ArithmeticRope>) {
          auto v = verify_rope(g, d);
          return v ? CheckResult{} : fail(v.clause + ": " + v.detail);
        } else if constexpr (std::is_same_v<T, FractionalColouring>) return verify_fractional_colouring(g, d);
        else return verify_trace(g, d);
      },
      doc);
}

}  // namespace tperf
