#include "gbs/report.hpp"

namespace gbs {

namespace {

Json parameters_json(const WitnessParameters& params) {
  Json out = Json::object();
  for (const auto& [name, value] : params) out[name] = json_integer(value);
  return out;
}

std::string target_name(const FiniteTarget& target) {
  return target.family == FiniteTarget::Family::Symmetric ? "S_" + std::to_string(target.size)
                                                          : "Z/" + std::to_string(target.size);
}

void flatten(const Json& node, const std::string& path, std::string& out) {
  if (node.is_object() && !node.empty()) {
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array() && !node.empty()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out += path + ": " + (node.is_string() ? node.get<std::string>() : node.dump()) + "\n";
  }
}

}  // namespace

Json json_integer(const Integer& value) {
  if (fits_json_number(value)) return Json(to_int64(value));
  return Json(to_string(value));
}

Json to_json(const FiniteHom& h, const Presentation& p) {
  Json images = Json::object();
  for (std::size_t i = 0; i < p.generators.size(); ++i) images[p.generators[i].name] = render_element(h.images[i]);
  return Json{{"target", target_name(h.target)}, {"images", images}};
}

Json to_json(const ProbeReport& r, const GbsGraph& g, const TreeData& t) {
  Json out;
  out["word"] = format_word(r.word, g);
  out["bounds"] = Json{{"sym_max", r.bounds.sym_max}, {"cyc_max", r.bounds.cyc_max}, {"limit", r.bounds.limit}};
  out["cyclic_homs_found"] = r.cyclic_homs_found;
  out["symmetric_homs_found"] = r.symmetric_homs_found;
  out["search_nodes"] = r.search_nodes;
  out["limit_exceeded"] = r.limit_exceeded;
  out["killed_in_all"] = r.killed_in_all;
  out["separating_hom"] = r.separating_hom ? to_json(*r.separating_hom, presentation(g, t)) : Json(nullptr);
  return out;
}

Json to_json(const ValidatedWitness& w, const GbsGraph& g, const TreeData& t) {
  Json out;
  out["recipe"] = recipe_name(w.recipe);
  out["parameters"] = parameters_json(w.parameters);
  out["word"] = format_word(w.word, g);
  out["nontrivial"] = w.nontrivial;
  if (w.probe) out["probe"] = to_json(*w.probe, g, t);
  return out;
}

Json to_json(const WitnessOutcome& w, const GbsGraph& g, const TreeData& t) {
  if (w.witness) return to_json(*w.witness, g, t);
  return Json{{"recipe", nullptr}, {"diagnostics", w.diagnostics}};
}

Json to_json(const Classification& c, const GbsGraph& g, const TreeData& t) {
  Json out;
  out["tag"] = tag_name(c.tag);
  switch (c.tag) {
    case Tag::Unimodular: {
      Json k = Json::object();
      for (VertexIndex v = 0; v < c.k.size(); ++v) k[g.vertices()[v]] = json_integer(c.k[v]);
      out["k"] = k;
      if (c.certificate) {
        const auto p = presentation(g, t);
        out["element"] = format_word(c.certificate->element, g);
        Json checks = Json::array();
        for (const auto& check : c.certificate->checks) {
          checks.push_back(Json{{"generator", p.generators[check.generator].name}, {"sign", check.sign}});
        }
        out["certificate"] = checks;
      }
      break;
    }
    case Tag::SolvableBS:
      if (c.solvable) {
        out["n"] = json_integer(c.solvable->n);
        out["trace"] = c.solvable->trace;
      }
      break;
    case Tag::NotResiduallyFinite:
      out["witness"] = c.witness ? to_json(*c.witness, g, t) : Json(nullptr);
      break;
  }
  out["linear"] = c.linear();
  out["residually_finite"] = c.residually_finite();
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      Rational e = m.at(i, j);
      e.canonicalize();
      row.push_back(e.get_num().get_str() + "/" + e.get_den().get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const MatrixRep& rep) {
  Json images = Json::object();
  for (std::size_t i = 0; i < rep.images.size(); ++i) images[rep.presentation.generators[i].name] = to_json(rep.images[i]);
  return Json{{"dimension", rep.dimension}, {"images", images}, {"verified", rep.verified}};
}

Json to_json(const FaithfulnessReport& r, const GbsGraph& g) {
  Json examples = Json::array();
  for (const auto& w : r.counterexamples) examples.push_back(format_word(w, g));
  return Json{{"samples", r.samples},
              {"seed", r.seed},
              {"trivial_samples", r.trivial},
              {"disagreements", r.disagreements},
              {"counterexamples", examples}};
}

Json to_json(const Presentation& p, const GbsGraph& g) {
  Json gens = Json::array();
  for (const auto& gen : p.generators) gens.push_back(gen.name);
  Json rels = Json::array();
  for (const auto& r : p.relators) {
    rels.push_back(Json{{"word", format_word(r.word, g)}, {"edge", r.edge ? Json(g.edge(*r.edge).id) : Json(nullptr)}});
  }
  return Json{{"generators", gens}, {"relators", rels}};
}

Json to_json(const PathWord& pw, const GbsGraph& g) {
  Json exps = Json::array();
  for (const auto& e : pw.exponents) exps.push_back(json_integer(e));
  Json steps = Json::array();
  for (const auto& s : pw.steps) {
    steps.push_back(Json{{"edge", g.edge(s.edge).id}, {"dir", s.dir == Direction::Forward ? "forward" : "backward"}});
  }
  return Json{{"base", g.vertices()[pw.base]}, {"exponents", exps}, {"steps", steps}};
}

Json tree_json(const GbsGraph& g, const TreeData& t) {
  Json parent = Json::object();
  for (VertexIndex v = 0; v < g.vertices().size(); ++v) {
    if (!t.parent[v]) continue;
    const auto& link = *t.parent[v];
    parent[g.vertices()[v]] = Json{{"parent", g.vertices()[link.parent]},
                                   {"edge", g.edge(link.edge).id},
                                   {"dir", link.dir == Direction::Forward ? "forward" : "backward"}};
  }
  Json tree = Json::array(), non_tree = Json::array();
  for (auto e : t.tree_edges) tree.push_back(g.edge(e).id);
  for (auto e : t.non_tree_edges) non_tree.push_back(g.edge(e).id);
  Json cycles = Json::array();
  for (const auto& c : fundamental_cycles(g, t)) {
    Json walk = Json::array();
    for (const auto& s : c.oriented_edges) {
      walk.push_back(g.edge(s.edge).id + (s.dir == Direction::Forward ? "+" : "-"));
    }
    cycles.push_back(Json{{"non_tree_edge", g.edge(c.non_tree_edge).id},
                          {"base", g.vertices()[c.base_vertex]},
                          {"walk", walk}});
  }
  return Json{{"root", g.vertices()[t.root]},
              {"tree_edges", tree},
              {"non_tree_edges", non_tree},
              {"parent", parent},
              {"betti", betti(g)},
              {"cycles", cycles}};
}

std::string to_text(const Json& doc) {
  std::string out;
  flatten(doc, "", out);
  return out;
}

}  // namespace gbs
