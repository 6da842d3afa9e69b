#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "tperf/colouring.hpp"
#include "tperf/corpus.hpp"
#include "tperf/error.hpp"
#include "tperf/io.hpp"
#include "tperf/polytopes.hpp"
#include "tperf/ropes.hpp"
#include "tperf/tminors.hpp"

using namespace tperf;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;
constexpr int kUsage = 64;

struct Options {
  std::string input;
  std::string format = "auto";
  bool json = false;
  Caps caps;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph load(const std::string& spec, const std::string& format) {
  if (spec.rfind("corpus:", 0) == 0) return make_named(spec.substr(7));
  return read_graph(slurp(spec), parse_graph_format(format));
}

std::string label_list(const Graph& g, const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(g.label(v));
  return out;
}

int report_perfection(const Graph& g, const PerfectionResult& r, const Options& o) {
  if (r.holds) {
    std::cout << (o.json ? "{\"holds\": true}" : "true") << "\n";
    return kHolds;
  }
  if (!o.json) std::cout << "false\n";
  std::cout << to_json(g, *r.witness) << "\n";
  return kFails;
}

int run_certify(const Graph& g, const Options& o, std::ostream& out) {
  CertifyParams params;
  params.caps = o.caps;
  const Certificate cert = certify(g, params);
  if (auto check = verify_certificate(g, cert, o.caps); !check)
    throw VerificationFailure("certificate failed its audit: " + check.failure);
  const bool colouring = std::holds_alternative<ColouringCertificate>(cert);
  if (o.json) {
    out << to_json(g, cert) << "\n";
  } else if (colouring) {
    const auto& c = std::get<ColouringCertificate>(cert);
    out << "colouring " << c.colouring.count << " colours, " << c.reduction_classes.size()
        << " reduction classes, verified\n";
  } else {
    out << "not t-perfect, witness verified\n" << to_json(g, cert) << "\n";
  }
  return colouring ? kHolds : kFails;
}

// One graph per non-empty line: a corpus reference or a graph6 string.
int run_batch(const std::string& path, const Options& o) {
  std::vector<std::string> lines;
  std::istringstream in(slurp(path));
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  std::vector<std::future<std::pair<int, std::string>>> jobs;
  for (const auto& line : lines)
    jobs.push_back(std::async(std::launch::async, [line, o] {
      std::ostringstream out;
      int code;
      try {
        const Graph g = line.rfind("corpus:", 0) == 0 ? make_named(line.substr(7)) : decode_graph6(line);
        code = run_certify(g, o, out);
      } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        code = kError;
      }
      return std::make_pair(code, out.str());
    }));
  int worst = kHolds;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [code, text] = jobs[i].get();
    std::cout << "# " << lines[i] << " exit " << code << "\n" << text;
    worst = std::max(worst, code);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for t-perfect graphs: polytope oracles, colourings, t-minors and ropes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--format", o.format, "Input graph format: auto, graph6, edge-list, json");
  app.add_option("--cap", o.caps.combinatorial, "Vertex cap for exact colouring and t-minor search");
  app.add_option("--polytope-cap", o.caps.polytope, "Vertex cap for polytope enumeration");
  app.add_option("--fractional-cap", o.caps.fractional, "Vertex cap for fractional colouring");

  auto graph_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", o.input, "Graph file, '-' for stdin, or corpus:NAME")->required();
    return sub;
  };

  auto* oddgirth_cmd = graph_command("oddgirth", "Length of a shortest odd cycle");
  auto* chi_cmd = graph_command("chi", "Exact chromatic number");
  auto* chistar_cmd = graph_command("chistar", "Exact fractional chromatic number");
  auto* tperfect_cmd = graph_command("tperfect", "Is TSTAB integral");
  auto* hperfect_cmd = graph_command("hperfect", "Is HSTAB integral");
  auto* hbar_cmd = graph_command("hbarperfect", "Is the complement h-perfect");
  auto* reduce_cmd = graph_command("reduce", "Stable set raising the odd girth past 2*ell+1");
  int ell = 1;
  reduce_cmd->add_option("--ell", ell, "Odd girth parameter")->required()->check(CLI::PositiveNumber);
  std::string batch;
  auto* certify_cmd = app.add_subcommand("certify", "Colouring certificate or imperfection witness");
  certify_cmd->add_option("graph", o.input, "Graph file, '-' for stdin, or corpus:NAME");
  certify_cmd->add_option("--batch", batch, "File with one graph6 string or corpus:NAME per line");
  auto* tcontract_cmd = graph_command("tcontract", "t-contract one vertex");
  int contract_label = 0;
  tcontract_cmd->add_option("--vertex", contract_label, "Label of the vertex to contract")->required();
  auto* wheel_cmd = graph_command("oddwheel-witness", "Search for an odd-wheel t-minor");
  std::size_t budget = SearchBudget{}.nodes;
  wheel_cmd->add_option("--budget", budget, "Node budget of the exhaustive search");

  auto* rope_cmd = app.add_subcommand("rope", "Arithmetic ropes");
  rope_cmd->require_subcommand(1);
  auto* rope_verify = rope_cmd->add_subcommand("verify", "Audit a rope document against a graph");
  std::string doc_path;
  rope_verify->add_option("graph", o.input, "Graph")->required();
  rope_verify->add_option("rope", doc_path, "Rope JSON document")->required();
  auto* rope_generate = rope_cmd->add_subcommand("generate", "Canonical rope graph");
  int rope_r = 5, odd_len = 7, even_len = 8, shell = 0;
  rope_generate->add_option("--r", rope_r, "Number of anchors");
  rope_generate->add_option("--odd", odd_len, "Odd path length");
  rope_generate->add_option("--even", even_len, "Even path length");
  rope_generate->add_option("--shell", shell, "Wrap in a levelled shell of this depth");
  auto* rope_find = rope_cmd->add_subcommand("find", "Relaxed rope search on the whole graph");
  rope_find->add_option("graph", o.input, "Graph")->required();
  rope_find->add_option("--r", rope_r, "Number of anchors");

  auto* corpus_cmd = app.add_subcommand("corpus", "Named fixtures");
  corpus_cmd->require_subcommand(1);
  auto* corpus_list = corpus_cmd->add_subcommand("list", "List the fixture corpus");
  auto* corpus_emit = corpus_cmd->add_subcommand("emit", "Print one fixture");
  std::string fixture, out_format = "graph6";
  corpus_emit->add_option("name", fixture, "Fixture name")->required();
  corpus_emit->add_option("--to", out_format, "Output format: graph6, edge-list, json");

  auto* verify_cmd = app.add_subcommand("verify", "Re-verify any emitted document");
  verify_cmd->add_option("graph", o.input, "Graph")->required();
  verify_cmd->add_option("document", doc_path, "JSON document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*corpus_list) {
      if (o.json) {
        std::cout << corpus_manifest_json() << "\n";
      } else {
        for (const auto& entry : named_corpus())
          std::cout << entry.name << "\t" << entry.graph.order() << "\t" << entry.description << "\n";
      }
      return kHolds;
    }
    if (*corpus_emit) {
      const Graph g = make_named(fixture);
      const auto f = parse_graph_format(out_format);
      if (f == GraphFormat::Json) std::cout << write_graph_json(g) << "\n";
      else if (f == GraphFormat::EdgeList) std::cout << write_edge_list(g);
      else std::cout << encode_graph6(g) << "\n";
      return kHolds;
    }
    if (*rope_generate) {
      const auto gen = shell > 0 ? generate_rope_shell(rope_r, odd_len, even_len, shell)
                                 : generate_rope(rope_r, odd_len, even_len);
      if (o.json) std::cout << "{\"graph\": " << write_graph_json(gen.graph) << ", \"rope\": "
                            << to_json(gen.graph, gen.rope, -1) << "}\n";
      else std::cout << encode_graph6(gen.graph) << "\n" << to_json(gen.graph, gen.rope) << "\n";
      return kHolds;
    }
    if (*certify_cmd) {
      if (!batch.empty()) return run_batch(batch, o);
      if (o.input.empty()) {
        std::cerr << "certify needs a graph or --batch\n";
        return kUsage;
      }
      return run_certify(load(o.input, o.format), o, std::cout);
    }

    const Graph g = load(o.input, o.format);
    if (*oddgirth_cmd) {
      const int og = odd_girth(g);
      std::cout << (og == kInfinity ? (o.json ? "null" : "inf") : std::to_string(og)) << "\n";
      return kHolds;
    }
    if (*chi_cmd) {
      const auto r = chi_exact(g, o.caps);
      if (o.json) std::cout << to_json(g, Certificate{ColouringCertificate{r.colouring, {}}}) << "\n";
      else std::cout << r.chi << "\n";
      return kHolds;
    }
    if (*chistar_cmd) {
      const auto r = chi_fractional(g, o.caps);
      if (o.json) std::cout << to_json(g, r.colouring) << "\n";
      else std::cout << to_string(r.value) << "\n";
      return kHolds;
    }
    if (*tperfect_cmd) return report_perfection(g, is_t_perfect(g, o.caps), o);
    if (*hperfect_cmd) return report_perfection(g, is_h_perfect(g, o.caps), o);
    if (*hbar_cmd) return report_perfection(g, is_hbar_perfect(g, o.caps), o);
    if (*reduce_cmd) {
      try {
        const VertexSet s = reduce_odd_girth(g, ell, o.caps);
        if (o.json) std::cout << "{\"kind\": \"stable-set\", \"ell\": " << ell << ", \"set\": [" << label_list(g, s)
                              << "]}\n";
        else std::cout << label_list(g, s) << "\n";
        return kHolds;
      } catch (const VerificationFailure& e) {
        std::cout << e.what() << "\n";
        return kFails;
      }
    }
    if (*tcontract_cmd) {
      TMinorTrace trace = start_trace(g);
      apply_step(trace, {TMinorStep::Kind::Contract, contract_label});
      if (o.json) std::cout << to_json(trace) << "\n";
      else std::cout << write_graph_json(trace.result) << "\n";
      return kHolds;
    }
    if (*wheel_cmd) {
      if (auto w = find_odd_wheel_tminor(g, SearchBudget{budget}, o.caps)) {
        std::cout << to_json(g, *w) << "\n";
        return kFails;
      }
      std::cout << "no odd-wheel t-minor found within the budget\n";
      return kHolds;
    }
    if (*rope_verify) {
      const Document doc = parse_document(g, slurp(doc_path));
      if (!std::holds_alternative<ArithmeticRope>(doc)) throw PreconditionError("document is not a rope");
      const auto v = verify_rope(g, std::get<ArithmeticRope>(doc));
      if (v) {
        std::cout << "rope verified\n";
        return kHolds;
      }
      std::cout << "rope rejected: " << v.clause << ": " << v.detail << "\n";
      return kFails;
    }
    if (*rope_find) {
      VertexSet all(g.order());
      for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
      try {
        const auto rope = find_rope(g, all, rope_r, {}, o.caps);
        std::cout << to_json(g, rope) << "\n";
        return kHolds;
      } catch (const RopeFailure& e) {
        std::cout << "no rope found: " << e.what() << "\n";
        return kFails;
      }
    }
    if (*verify_cmd) {
      const auto check = verify_document(g, parse_document(g, slurp(doc_path)), o.caps);
      std::cout << (check ? "verified" : "rejected: " + check.failure) << "\n";
      return check ? kHolds : kFails;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kUsage;
}
