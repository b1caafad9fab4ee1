#include "gbs/witness.hpp"

#include "gbs/britton.hpp"
#include "gbs/error.hpp"
#include "gbs/presentation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gbs {

namespace {

[[noreturn]] void precondition(const std::string& message) {
  throw Error(ErrorKind::PreconditionViolated, message);
}

long small_exponent(const Integer& value, const char* what) {
  if (compare_abs(value, Integer(1000000)) > 0) precondition(std::string(what) + " is too large for a word power");
  return value.get_si();
}

GroupWord pow_vertex(const GroupWord& x, const Integer& k) {
  // Fast path for single-letter vertex generators keeps the exponent exact.
  if (x.size() == 1 && x.letters()[0].is_vertex()) {
    const auto& l = x.letters()[0];
    return GroupWord::vertex(l.index, l.exponent * k);
  }
  return power(x, small_exponent(k, "exponent"));
}

bool unit(const Integer& v) { return compare_abs(v, Integer(1)) == 0; }

// Orients a closed walk so that every entering label is a unit; nullopt if
// neither direction qualifies.
std::optional<std::vector<Step>> ascending_orientation(const GbsGraph& g, const std::vector<Step>& walk) {
  if (unit(loop_labels(g, walk).entering)) return walk;
  auto rev = reverse_walk(walk);
  if (unit(loop_labels(g, rev).entering)) return rev;
  return std::nullopt;
}

std::set<EdgeIndex> edge_set(const Cycle& c) {
  std::set<EdgeIndex> out;
  for (const auto& s : c.oriented_edges) out.insert(s.edge);
  return out;
}

// Edges off the cycle, explored breadth-first from the cycle vertices.
// `via` records the step that reached each vertex, `attach` its cycle vertex.
struct HangingSearch {
  std::vector<std::optional<Step>> via;
  std::vector<VertexIndex> attach;
  std::vector<bool> on_cycle;
  std::vector<Step> order;  // every hanging edge once, oriented away
};

HangingSearch hanging_search(const GbsGraph& g, const Cycle& c) {
  const auto n = g.vertices().size();
  HangingSearch h{std::vector<std::optional<Step>>(n), std::vector<VertexIndex>(n), std::vector<bool>(n, false), {}};
  const auto cycle_edges = edge_set(c);
  std::vector<bool> seen(n, false);
  std::deque<VertexIndex> queue;
  for (const auto& s : c.oriented_edges) {
    auto v = g.source(s);
    if (!seen[v]) {
      seen[v] = true;
      h.on_cycle[v] = true;
      h.attach[v] = v;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (EdgeIndex e = 0; e < g.edges().size(); ++e) {
      if (cycle_edges.count(e)) continue;
      for (auto dir : {Direction::Forward, Direction::Backward}) {
        Step s{e, dir};
        if (g.source(s) != v) continue;
        auto w = g.target(s);
        if (seen[w]) continue;
        seen[w] = true;
        h.via[w] = s;
        h.attach[w] = h.attach[v];
        h.order.push_back(s);
        queue.push_back(w);
      }
    }
  }
  return h;
}

std::optional<Step> offending_step(const GbsGraph& g, const HangingSearch& h) {
  // Breadth-first order reaches the edges nearest the cycle first; edges
  // past an offending one are irrelevant.
  for (const auto& s : h.order) {
    if (!unit(g.exiting_label(s))) {
      bool chain_ok = true;
      auto v = g.source(s);
      while (!h.on_cycle[v]) {
        if (!unit(g.exiting_label(*h.via[v]))) chain_ok = false;
        v = g.source(*h.via[v]);
      }
      if (chain_ok) return s;
    }
  }
  return std::nullopt;
}

// Loop subgroups of one cycle with the least exponents, based at each cycle
// vertex in turn (the cycle's own base first): u^-1 x^M u = x^N where M is
// the least power of x that survives the walk. The subgroup <x, u> can carry
// more relations than this one when a vertex group along the walk contains
// x, so the bases give genuinely different candidates.
std::vector<LoopSubgroup> loop_variants(const GbsGraph& g, const TreeData& t, const Cycle& c) {
  std::vector<LoopSubgroup> out;
  std::set<VertexIndex> seen;
  for (const auto& step : c.oriented_edges) {
    const auto b = g.source(step);
    if (!seen.insert(b).second) continue;
    const auto walk = rotate_walk(g, c.oriented_edges, b);
    LoopSubgroup sub;
    sub.base = b;
    sub.u = walk_word(t, walk);
    sub.x = GroupWord::vertex(b);
    sub.M = min_transport_power(g, walk);
    sub.N = *transport(g, walk, sub.M);
    out.push_back(std::move(sub));
  }
  return out;
}

// Drops steps that immediately retrace the previous one.
std::vector<Step> free_reduce(const std::vector<Step>& walk) {
  std::vector<Step> out;
  for (const auto& s : walk) {
    if (!out.empty() && out.back().edge == s.edge && out.back().dir != s.dir) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

ValidatedWitness make(GroupWord w, WitnessRecipe r, WitnessParameters params, bool nontrivial) {
  ValidatedWitness out;
  out.word = std::move(w);
  out.recipe = r;
  out.parameters = std::move(params);
  out.nontrivial = nontrivial;
  return out;
}

}  // namespace

std::string recipe_name(WitnessRecipe recipe) {
  switch (recipe) {
    case WitnessRecipe::CoprimeExponents: return "Claim1";
    case WitnessRecipe::ProperDivisor: return "Claim2";
    case WitnessRecipe::LoopCommutator: return "Sec4Commutator";
    case WitnessRecipe::LoopMixed: return "Sec4Mixed";
    case WitnessRecipe::HangingEdge: return "Claim5Route";
    case WitnessRecipe::MultiLoop: return "MultiLoopComposite";
  }
  return "?";
}

TemplateWord claim1_witness(const Integer& m_in, const Integer& n_in, const GroupWord& x, const GroupWord& t) {
  if (m_in == 0 || n_in == 0) precondition("exponents must be nonzero");
  Integer m = m_in, n = n_in;
  if (m < 0) {
    m = -m;
    n = -n;
  }
  const Integer s = gcd(m, n);
  const Integer mp = m / s, np = n / s;
  if (compare_abs(mp, Integer(1)) <= 0 || compare_abs(np, Integer(1)) <= 0) {
    precondition("one exponent divides the other");
  }
  Integer a = 0;
  for (; a < mp; ++a) {
    Integer r = (a * np + 1) % mp;  // mpz % truncates toward zero
    if (r == 0) break;
  }
  const Integer b = (a * np + 1) / mp;
  const auto inner = invert(t) * pow_vertex(x, a * s) * t * pow_vertex(x, -b * s);
  TemplateWord out;
  out.word = pow_vertex(x, s) * power(inner, small_exponent(mp, "m'"));
  out.parameters = {{"s", s}, {"m'", mp}, {"n'", np}, {"a", a}, {"b", b}};
  return out;
}

TemplateWord claim2_witness(const Integer& m, const Integer& q, const GroupWord& x, const GroupWord& t) {
  if (compare_abs(m, Integer(2)) < 0 || compare_abs(q, Integer(2)) < 0) {
    precondition("the dividing template needs |m| >= 2 and |q| >= 2");
  }
  const auto base = t * pow_vertex(x, m) * invert(t) * x;
  TemplateWord out;
  out.word = pow_vertex(x, -m - q) * power(base, small_exponent(q, "q"));
  out.parameters = {{"m", m}, {"q", q}};
  return out;
}

GroupWord sec4_commutator_witness(const GroupWord& x, const GroupWord& t, const GroupWord& u, const Integer& p) {
  const auto xp = pow_vertex(x, p);
  return commutator(t * xp * invert(t), u * xp * invert(u));
}

GroupWord sec4_mixed_witness(const GroupWord& x, const GroupWord& t, const GroupWord& u, const Integer& m, int e) {
  return u * t * pow_vertex(x, m) * invert(t) * invert(u) * t * pow_vertex(x, -e * m) * invert(t);
}

LoopSubgroup loop_subgroup(const GbsGraph& g, const TreeData& t, const Cycle& c) {
  LoopSubgroup out;
  out.base = c.base_vertex;
  out.u = walk_word(t, c.oriented_edges);
  out.x = GroupWord::vertex(c.base_vertex);
  const auto labels = loop_labels(g, c.oriented_edges);
  out.M = labels.entering;
  out.N = labels.exiting;
  return out;
}

TemplateWord claim5_route_witness(const GbsGraph& g, const TreeData& t, EdgeIndex offending_edge,
                                  const Cycle& cycle) {
  if (betti(g) != 1) precondition("hanging-edge route needs exactly one loop");
  const auto h = hanging_search(g, cycle);
  std::optional<Step> step;
  for (const auto& s : h.order) {
    if (s.edge == offending_edge) step = s;
  }
  if (!step) precondition("edge does not hang off the loop");
  const Integer c = g.exiting_label(*step);
  if (compare_abs(c, Integer(2)) < 0) precondition("far label is a unit; the edge collapses");
  for (auto v = g.source(*step); !h.on_cycle[v]; v = g.source(*h.via[v])) {
    if (!unit(g.exiting_label(*h.via[v]))) precondition("an edge nearer the loop does not collapse");
  }
  const auto attach = h.attach[g.source(*step)];
  auto walk = ascending_orientation(g, rotate_walk(g, cycle.oriented_edges, attach));
  if (!walk) precondition("loop is not of type (1, l)");
  const Integer l = *transport(g, *walk, Integer(1));
  auto out = claim2_witness(c, l, GroupWord::vertex(g.target(*step)), walk_word(t, *walk));
  out.parameters["l"] = l;
  return out;
}

bool validate_witness(const GroupWord& w, const GbsGraph& g, const TreeData& t) { return !is_trivial(w, g, t); }

WitnessOutcome build_witness(const GbsGraph& g, const TreeData& t, const std::optional<ProbeBounds>& probe) {
  WitnessOutcome out;
  const auto cycles = fundamental_cycles(g, t);

  auto accept = [&](ValidatedWitness w) {
    if (probe) w.probe = rf_probe(g, t, w.word, *probe);
    out.witness = std::move(w);
  };
  auto attempt = [&](const TemplateWord& tw, WitnessRecipe r, const std::string& where) {
    if (validate_witness(tw.word, g, t)) {
      accept(make(tw.word, r, tw.parameters, true));
      return true;
    }
    out.diagnostics.push_back(recipe_name(r) + " word on " + where + " reduced to the identity");
    return false;
  };

  // Coprime and properly dividing loops.
  auto where = [&](const Cycle& c, const LoopSubgroup& sub) {
    return "loop through edge " + g.edge(c.non_tree_edge).id + " based at x." + g.vertices()[sub.base];
  };
  for (const auto& c : cycles) {
    for (const auto& sub : loop_variants(g, t, c)) {
      const Integer s = gcd(sub.M, sub.N);
      const Integer mp = sub.M / s, np = sub.N / s;
      if (compare_abs(mp, Integer(1)) > 0 && compare_abs(np, Integer(1)) > 0) {
        if (attempt(claim1_witness(sub.M, sub.N, sub.x, sub.u), WitnessRecipe::CoprimeExponents, where(c, sub))) {
          return out;
        }
      }
    }
  }
  for (const auto& c : cycles) {
    for (const auto& sub : loop_variants(g, t, c)) {
      if (compare_abs(sub.M, Integer(2)) >= 0) {
        if (auto q = divide_exact(sub.N, sub.M); q && compare_abs(*q, Integer(2)) >= 0) {
          if (attempt(claim2_witness(sub.M, *q, sub.x, sub.u), WitnessRecipe::ProperDivisor, where(c, sub))) {
            return out;
          }
        }
      }
      if (compare_abs(sub.N, Integer(2)) >= 0) {
        if (auto q = divide_exact(sub.M, sub.N); q && compare_abs(*q, Integer(2)) >= 0) {
          if (attempt(claim2_witness(sub.N, *q, sub.x, invert(sub.u)), WitnessRecipe::ProperDivisor, where(c, sub))) {
            return out;
          }
        }
      }
    }
  }

  if (cycles.size() == 1) {
    const auto& c = cycles.front();
    const auto h = hanging_search(g, c);
    if (!ascending_orientation(g, c.oriented_edges)) {
      out.diagnostics.push_back("loop through edge " + g.edge(c.non_tree_edge).id + " is not of type (1, l)");
    } else if (auto s = offending_step(g, h)) {
      if (attempt(claim5_route_witness(g, t, s->edge, c), WitnessRecipe::HangingEdge,
                  "edge " + g.edge(s->edge).id)) {
        return out;
      }
    } else {
      out.diagnostics.push_back("no hanging edge with a non-unit far label");
    }
    return out;
  }

  // Two loops at a common vertex: one ascending loop (entering labels units)
  // against each other loop, both carried to the same vertex power.
  // Every vertex of the ascending loop is tried as the base, its own base
  // first: a vertex group along the loop may contain the others.
  for (const auto& c1 : cycles) {
    if (!ascending_orientation(g, c1.oriented_edges)) continue;
    std::vector<VertexIndex> bases{c1.base_vertex};
    for (const auto& s : c1.oriented_edges) {
      if (std::find(bases.begin(), bases.end(), g.source(s)) == bases.end()) bases.push_back(g.source(s));
    }
    for (const VertexIndex b : bases) {
      auto walk1 = ascending_orientation(g, rotate_walk(g, c1.oriented_edges, b));
      const auto l = loop_labels(g, *walk1);
      if (unit(l.exiting)) continue;  // unimodular loop
      const auto x = GroupWord::vertex(b);
      const auto u1 = walk_word(t, *walk1);
      for (const auto& c2 : cycles) {
        if (c2.non_tree_edge == c1.non_tree_edge) continue;
        auto walk2 = tree_path(g, t, b, c2.base_vertex);
        walk2.insert(walk2.end(), c2.oriented_edges.begin(), c2.oriented_edges.end());
        const auto back = tree_path(g, t, c2.base_vertex, b);
        walk2.insert(walk2.end(), back.begin(), back.end());
        walk2 = free_reduce(walk2);
        const auto u2 = walk_word(t, walk2);
        const bool rose = walk1->size() == 1 && c2.oriented_edges.size() == 1 && c2.base_vertex == b;

        const auto where = "loops through edges " + g.edge(c1.non_tree_edge).id + " and " +
                           g.edge(c2.non_tree_edge).id + " based at x." + g.vertices()[b];
        // Orient the second loop so it carries x^P to an integral multiple of
        // x^P; keep P as small as possible so its conjugates stay outside <x>.
        auto common_power = [&](const std::vector<Step>& w) -> std::optional<Integer> {
          const Integer p = lcm(min_transport_power(g, *walk1), min_transport_power(g, w));
          if (!divide_exact(*transport(g, w, p), p)) return std::nullopt;
          return p;
        };
        GroupWord other = u2;
        auto p_forward = common_power(walk2);
        const auto reversed = reverse_walk(walk2);
        auto p_backward = common_power(reversed);
        if (!p_forward && !p_backward) {
          out.diagnostics.push_back(where + " have incomparable exponents");
          continue;
        }
        Integer p;
        if (p_forward && (!p_backward || *p_forward <= *p_backward)) {
          p = *p_forward;
        } else {
          p = *p_backward;
          walk2 = reversed;
          other = invert(u2);
        }
        for (int round = 0; round < 8; ++round, p *= 2) {
          const Integer r1 = *transport(g, *walk1, p) / p;
          const Integer r2 = *transport(g, walk2, p) / p;
          const bool first = rose && round == 0;
          GroupWord w;
          WitnessParameters params{{"P", p}, {"l", r1}};
          WitnessRecipe recipe;
          if (unit(r2)) {
            const int e = sign(r2);
            w = sec4_mixed_witness(x, u1, other, p, e);
            params["e"] = e;
            params["form"] = 2;
            recipe = first ? WitnessRecipe::LoopMixed : WitnessRecipe::MultiLoop;
          } else {
            w = sec4_commutator_witness(x, u1, other, p);
            params["r"] = r2;
            params["form"] = 1;
            recipe = first ? WitnessRecipe::LoopCommutator : WitnessRecipe::MultiLoop;
          }
          if (validate_witness(w, g, t)) {
            accept(make(w, recipe, params, true));
            return out;
          }
          out.diagnostics.push_back("composite word on " + where + " at power " + to_string(p) +
                                    " reduced to the identity");
        }
      }
    }
  }
  if (out.diagnostics.empty()) out.diagnostics.push_back("no loop configuration matched a witness recipe");
  return out;
}

}  // namespace gbs
