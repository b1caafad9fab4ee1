// gbs: command-line front end.
//
// Exit codes: 0 success, 1 internal error, 2 unreadable or invalid input
// (graph file or word), 3 the graph's classification does not suit the
// command.

#include "gbs/britton.hpp"
#include "gbs/classifier.hpp"
#include "gbs/error.hpp"
#include "gbs/graph.hpp"
#include "gbs/linearity.hpp"
#include "gbs/report.hpp"
#include "gbs/witness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace gbs;

struct Config {
  std::string graph_path;
  std::string word;
  ProbeBounds bounds;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  std::string format = "json";
};

struct ExitCode {
  int code;
  std::string message;
};

GbsGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Validation, "cannot read graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void emit(const Json& doc, const Config& cfg) {
  if (cfg.format == "text") {
    std::cout << to_text(doc);
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

void require_tag(const Classification& c, Tag wanted, const std::string& command) {
  if (c.tag != wanted) {
    throw ExitCode{3, command + " needs a " + tag_name(wanted) + " graph; this graph is " + tag_name(c.tag)};
  }
}

void run_classify(const Config& cfg) {
  const auto g = load_graph(cfg.graph_path);
  const auto t = spanning_tree(g);
  emit(to_json(classify(g, t), g, t), cfg);
}

void run_nf(const Config& cfg) {
  const auto g = load_graph(cfg.graph_path);
  const auto t = spanning_tree(g);
  const auto w = parse_word(cfg.word, presentation(g, t));
  const auto reduced = britton_reduce(to_path_form(w, g, t), g);
  Json doc;
  doc["input"] = format_word(w, g);
  doc["reduced"] = format_word(from_path_form(reduced, g, t), g);
  doc["path"] = to_json(reduced, g);
  doc["trivial"] = reduced.empty();
  emit(doc, cfg);
}

void run_witness(const Config& cfg) {
  const auto g = load_graph(cfg.graph_path);
  const auto t = spanning_tree(g);
  const auto c = classify(g, t, ClassifyOptions{false, std::nullopt});
  require_tag(c, Tag::NotResiduallyFinite, "witness");
  const auto outcome = build_witness(g, t, cfg.bounds);
  emit(to_json(outcome, g, t), cfg);
}

void run_probe(const Config& cfg) {
  const auto g = load_graph(cfg.graph_path);
  const auto t = spanning_tree(g);
  const auto w = parse_word(cfg.word, presentation(g, t));
  emit(to_json(rf_probe(g, t, w, cfg.bounds), g, t), cfg);
}

void run_rep(const Config& cfg) {
  const auto g = load_graph(cfg.graph_path);
  const auto t = spanning_tree(g);
  const auto c = classify(g, t, ClassifyOptions{false, std::nullopt});
  require_tag(c, Tag::SolvableBS, "rep");
  const auto rep = affine_rep(g, t);
  Json doc;
  doc["n"] = json_integer(c.solvable->n);
  doc["rep"] = to_json(rep);
  doc["faithfulness"] = to_json(faithfulness_check(rep, g, t, cfg.samples, cfg.seed), g);
  emit(doc, cfg);
}

void run_quotient(const Config& cfg) {
  const auto g = load_graph(cfg.graph_path);
  const auto t = spanning_tree(g);
  const auto c = classify(g, t);
  require_tag(c, Tag::Unimodular, "quotient");
  const auto p = presentation(g, t);
  const auto character = orientation_character(g, t, *c.certificate);
  Json k = Json::object();
  for (VertexIndex v = 0; v < c.k.size(); ++v) k[g.vertices()[v]] = json_integer(c.k[v]);
  Json signs = Json::object();
  for (std::size_t i = 0; i < p.generators.size(); ++i) signs[p.generators[i].name] = character.signs[i];
  Json doc;
  doc["k"] = k;
  doc["presentation"] = to_json(finite_quotient_graph(g, t, c.k), g);
  doc["orientation"] = signs;
  doc["kernel_index"] = character.kernel.index();
  emit(doc, cfg);
}

void run_tree(const Config& cfg) {
  const auto g = load_graph(cfg.graph_path);
  emit(tree_json(g, spanning_tree(g)), cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residual finiteness and linearity of generalized Baumslag-Solitar groups"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("graph", cfg.graph_path, "graph JSON file")->required();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--sym-max", cfg.bounds.sym_max, "largest symmetric degree searched")->check(CLI::Range(1, 8));
    sub->add_option("--cyc-max", cfg.bounds.cyc_max, "largest cyclic order searched")->check(CLI::PositiveNumber);
    sub->add_option("--limit", cfg.bounds.limit, "cap on symmetric homomorphisms visited")->check(CLI::PositiveNumber);
  };

  std::vector<std::pair<CLI::App*, void (*)(const Config&)>> commands;
  auto* classify_cmd = app.add_subcommand("classify", "classify the group and attach the evidence");
  add_common(classify_cmd);
  commands.emplace_back(classify_cmd, run_classify);

  auto* nf_cmd = app.add_subcommand("nf", "Britton-reduced form of a word");
  add_common(nf_cmd);
  nf_cmd->add_option("--word", cfg.word, "word, e.g. \"t.e1^-1 * x.v^4 * t.e1\"")->required();
  commands.emplace_back(nf_cmd, run_nf);

  auto* witness_cmd = app.add_subcommand("witness", "witness word of a non-residually-finite group");
  add_common(witness_cmd);
  add_bounds(witness_cmd);
  commands.emplace_back(witness_cmd, run_witness);

  auto* probe_cmd = app.add_subcommand("probe", "search small finite quotients for one separating a word");
  add_common(probe_cmd);
  add_bounds(probe_cmd);
  probe_cmd->add_option("--word", cfg.word, "word to separate")->required();
  commands.emplace_back(probe_cmd, run_probe);

  auto* rep_cmd = app.add_subcommand("rep", "faithful matrix representation of a BS(1, n) graph");
  add_common(rep_cmd);
  rep_cmd->add_option("--samples", cfg.samples, "random words compared")->check(CLI::PositiveNumber);
  rep_cmd->add_option("--seed", cfg.seed, "sampler seed");
  commands.emplace_back(rep_cmd, run_rep);

  auto* quotient_cmd = app.add_subcommand("quotient", "finite-cyclic quotient of a unimodular graph");
  add_common(quotient_cmd);
  commands.emplace_back(quotient_cmd, run_quotient);

  auto* tree_cmd = app.add_subcommand("tree", "spanning tree and fundamental cycles");
  add_common(tree_cmd);
  commands.emplace_back(tree_cmd, run_tree);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [sub, run] : commands) {
      if (sub->parsed()) run(cfg);
    }
    return 0;
  } catch (const ExitCode& e) {
    std::cerr << "gbs: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    std::cerr << "gbs: " << e.what() << "\n";
    if (e.is_input_error() || e.kind() == ErrorKind::TrivialWordRejected) return 2;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "gbs: internal error: " << e.what() << "\n";
    return 1;
  }
}
