#include "gbs/classifier.hpp"

#include "gbs/britton.hpp"
#include "gbs/error.hpp"

#include <deque>
#include <set>

namespace gbs {

namespace {

bool unit(const Integer& v) { return compare_abs(v, Integer(1)) == 0; }

Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Least C > 0 with C * r integral for every r: lcm of denominators over gcd
// of numerators.
Rational least_clearing_multiple(const std::vector<Rational>& rs) {
  Integer num = 0, den = 1;
  for (const auto& r : rs) {
    num = gcd(num, r.get_num());
    den = lcm(den, r.get_den());
  }
  Rational c(den, num);
  c.canonicalize();
  return c;
}

std::optional<std::vector<Integer>> scaled_exponents(const std::vector<Rational>& weight, const Rational& c) {
  std::vector<Integer> k;
  for (const auto& w : weight) {
    Rational kv = c * w;
    kv.canonicalize();
    if (kv.get_den() != 1) return std::nullopt;
    k.push_back(kv.get_num());
  }
  return k;
}

GroupWord certificate_word(const GroupWord& s, const GroupWord& z, int sign) {
  const auto zinv = invert(z);
  return s * z * invert(s) * (sign > 0 ? zinv : z);
}

// Whether every generator conjugates x_v^k to x_v^(+-k).
bool normalizes(const GbsGraph& g, const TreeData& t, VertexIndex v, const Integer& k) {
  const auto z = GroupWord::vertex(v, k);
  for (const auto& gen : presentation(g, t).generators) {
    const auto s = gen.word();
    if (!is_trivial(certificate_word(s, z, 1), g, t) && !is_trivial(certificate_word(s, z, -1), g, t)) return false;
  }
  return true;
}

// Primes of all labels, by trial division; a cofactor left after the
// division bound is kept whole.
std::vector<Integer> label_primes(const GbsGraph& g) {
  std::set<Integer> out;
  for (const auto& rec : g.edges()) {
    for (Integer n : {abs(rec.label_from), abs(rec.label_to)}) {
      for (Integer q = 2; q <= 100000 && q * q <= n; ++q) {
        if (n % q != 0) continue;
        out.insert(q);
        while (n % q == 0) n /= q;
      }
      if (n > 1) out.insert(n);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

ModularMap modular_map(const GbsGraph& g, const TreeData& t) {
  ModularMap m;
  m.value.assign(g.vertices().size(), Rational(0));
  m.value[t.root] = 1;
  // Breadth-first discovery order: parents are valued before children.
  for (EdgeIndex e : t.tree_edges) {
    const auto& rec = g.edge(e);
    Rational ratio(rec.label_from, rec.label_to);
    ratio.canonicalize();
    if (m.value[rec.from] != 0 && m.value[rec.to] == 0) {
      m.value[rec.to] = m.value[rec.from] * ratio;
    } else {
      m.value[rec.from] = m.value[rec.to] / ratio;
    }
  }
  for (EdgeIndex e : t.non_tree_edges) {
    const auto& rec = g.edge(e);
    Rational r = m.value[rec.from] * Rational(rec.label_from) / (m.value[rec.to] * Rational(rec.label_to));
    r.canonicalize();
    m.cycle_ratio.emplace(e, r);
  }
  return m;
}

bool is_unimodular(const GbsGraph& g, const TreeData& t) {
  for (const auto& [e, r] : modular_map(g, t).cycle_ratio) {
    if (abs_rational(r) != 1) return false;
  }
  return true;
}

std::vector<Integer> normal_exponents(const GbsGraph& g, const TreeData& t) {
  const auto m = modular_map(g, t);
  for (const auto& [e, r] : m.cycle_ratio) {
    if (abs_rational(r) != 1) {
      throw Error(ErrorKind::NotUnimodular, "loop through edge " + g.edge(e).id + " has ratio " + to_string(r));
    }
  }
  // x_v^(k_v) is the same element up to sign when k_v is proportional to
  // 1 / |value(v)|; it must also lie in every edge group at v.
  std::vector<Rational> weight;
  for (const auto& v : m.value) {
    Rational w = 1 / abs_rational(v);
    w.canonicalize();
    weight.push_back(w);
  }
  std::vector<Rational> constraints = weight;
  for (const auto& rec : g.edges()) {
    Rational a = weight[rec.from] / Rational(abs(rec.label_from));
    Rational b = weight[rec.to] / Rational(abs(rec.label_to));
    a.canonicalize();
    b.canonicalize();
    constraints.push_back(a);
    constraints.push_back(b);
  }
  auto k = scaled_exponents(weight, least_clearing_multiple(constraints));
  if (!k || !normalizes(g, t, t.root, (*k)[t.root])) {
    // Product of all labels at the root is always enough when unimodular.
    Integer product = 1;
    for (const auto& rec : g.edges()) product *= abs(rec.label_from) * abs(rec.label_to);
    k = scaled_exponents(weight, Rational(product));
    if (!k || !normalizes(g, t, t.root, (*k)[t.root])) {
      throw Error(ErrorKind::CertificateFailure, "no normal power of x." + g.vertices()[t.root] + " found");
    }
  }
  // Normal powers of one generator are closed under gcd, so the least one
  // divides the candidate and is reached by stripping primes one at a time.
  // Every prime involved divides some label.
  const auto primes = label_primes(g);
  std::vector<Integer> out(k->size());
  for (VertexIndex v = 0; v < k->size(); ++v) {
    Integer j = (*k)[v];
    if (!normalizes(g, t, v, j)) throw Error(ErrorKind::CertificateFailure, "x." + g.vertices()[v] + " has no normal power");
    for (const auto& q : primes) {
      while (j % q == 0 && normalizes(g, t, v, j / q)) j /= q;
    }
    out[v] = j;
  }
  normality_certificate(g, t, out);
  return out;
}

NormalityCertificate normality_certificate(const GbsGraph& g, const TreeData& t, const std::vector<Integer>& k) {
  if (k.size() != g.vertices().size()) throw Error(ErrorKind::PreconditionViolated, "one exponent per vertex expected");
  NormalityCertificate c;
  c.vertex = t.root;
  c.exponent = k[t.root];
  c.element = GroupWord::vertex(t.root, c.exponent);
  const auto p = presentation(g, t);
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    const auto s = p.generators[i].word();
    int found = 0;
    for (int sign : {1, -1}) {
      if (is_trivial(certificate_word(s, c.element, sign), g, t)) {
        found = sign;
        break;
      }
    }
    if (found == 0) {
      throw Error(ErrorKind::CertificateFailure,
                  p.generators[i].name + " does not normalize x." + g.vertices()[t.root] + "^" + to_string(c.exponent));
    }
    c.checks.push_back(CertificateCheck{i, found});
  }
  return c;
}

bool verify_certificate(const GbsGraph& g, const TreeData& t, const NormalityCertificate& c) {
  const auto p = presentation(g, t);
  if (c.checks.size() != p.generators.size()) return false;
  for (const auto& check : c.checks) {
    if (check.generator >= p.generators.size()) return false;
    if (!is_trivial(certificate_word(p.generators[check.generator].word(), c.element, check.sign), g, t)) return false;
  }
  return true;
}

std::optional<SolvableForm> recognize_solvable(const GbsGraph& g, const TreeData& t) {
  if (betti(g) != 1) return std::nullopt;
  const auto cycle = fundamental_cycles(g, t).front();
  auto walk = cycle.oriented_edges;
  if (!unit(loop_labels(g, walk).entering)) {
    walk = reverse_walk(walk);
    if (!unit(loop_labels(g, walk).entering)) return std::nullopt;
  }
  SolvableForm out;
  out.n = *transport(g, walk, Integer(1));

  std::set<EdgeIndex> on_loop;
  std::vector<bool> seen(g.vertices().size(), false);
  std::deque<VertexIndex> queue;
  std::string loop_text;
  for (const auto& s : walk) {
    on_loop.insert(s.edge);
    loop_text += (loop_text.empty() ? "" : " ") + g.edge(s.edge).id + (s.dir == Direction::Forward ? "+" : "-");
    auto v = g.source(s);
    if (!seen[v]) {
      seen[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (EdgeIndex e = 0; e < g.edges().size(); ++e) {
      if (on_loop.count(e)) continue;
      for (auto dir : {Direction::Forward, Direction::Backward}) {
        Step s{e, dir};
        if (g.source(s) != v || seen[g.target(s)]) continue;
        const auto& far = g.exiting_label(s);
        if (!unit(far)) return std::nullopt;
        const auto w = g.target(s);
        seen[w] = true;
        queue.push_back(w);
        out.trace.push_back("collapse " + g.edge(e).id + ": x." + g.vertices()[w] + " = x." + g.vertices()[v] + "^" +
                            to_string(Integer(g.entering_label(s) * far)));
      }
    }
  }
  out.trace.push_back("loop " + loop_text + " at x." + g.vertices()[g.source(walk.front())] + ": BS(1, " +
                      to_string(out.n) + ")");
  return out;
}

std::string tag_name(Tag tag) {
  switch (tag) {
    case Tag::Unimodular: return "Unimodular";
    case Tag::SolvableBS: return "SolvableBS";
    case Tag::NotResiduallyFinite: return "NotResiduallyFinite";
  }
  return "?";
}

Classification classify(const GbsGraph& g, const TreeData& t, const ClassifyOptions& options) {
  Classification c;
  if (is_unimodular(g, t)) {
    c.tag = Tag::Unimodular;
    c.k = normal_exponents(g, t);
    c.certificate = normality_certificate(g, t, c.k);
    return c;
  }
  if (auto s = recognize_solvable(g, t)) {
    c.tag = Tag::SolvableBS;
    c.solvable = std::move(s);
    return c;
  }
  c.tag = Tag::NotResiduallyFinite;
  if (options.build_witness) c.witness = build_witness(g, t, options.probe);
  return c;
}

Classification classify(const GbsGraph& g, const ClassifyOptions& options) {
  return classify(g, spanning_tree(g), options);
}

Presentation finite_quotient_graph(const GbsGraph& g, const TreeData& t, const std::vector<Integer>& k) {
  if (!is_unimodular(g, t)) throw Error(ErrorKind::NotUnimodular, "quotient needs a unimodular graph");
  if (k.size() != g.vertices().size()) throw Error(ErrorKind::PreconditionViolated, "one exponent per vertex expected");
  auto p = presentation(g, t);
  for (VertexIndex v = 0; v < k.size(); ++v) p.relators.push_back(Relator{GroupWord::vertex(v, k[v]), std::nullopt});
  return p;
}

}  // namespace gbs
