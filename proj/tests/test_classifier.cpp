#include "gbs/britton.hpp"
#include "gbs/classifier.hpp"
#include "gbs/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gbs;

namespace {

ErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Syntax;
}

}  // namespace

TEST_CASE("modular map") {
  const auto bs = baumslag_solitar(2, 3);
  const auto m = modular_map(bs, spanning_tree(bs));
  CHECK(m.value[0] == 1);
  CHECK(m.cycle_ratio.at(0) == Rational(2, 3));

  const GbsGraph a({"u", "v"}, {{"e1", 0, 1, 2, 3}, {"e2", 1, 0, 3, 2}});
  const auto ma = modular_map(a, spanning_tree(a));
  CHECK(ma.value[1] == Rational(2, 3));
  CHECK(ma.cycle_ratio.at(1) == 1);
  CHECK(is_unimodular(a, spanning_tree(a)));

  const GbsGraph b({"u", "v"}, {{"e1", 0, 1, 1, 2}, {"e2", 1, 0, 1, 3}});
  const auto mb = modular_map(b, spanning_tree(b));
  CHECK(abs(mb.cycle_ratio.at(1).get_num()) == 1);
  CHECK(mb.cycle_ratio.at(1).get_den() == 6);
  CHECK_FALSE(is_unimodular(b, spanning_tree(b)));
}

TEST_CASE("unimodularity") {
  auto uni = [](long m, long n) {
    const auto g = baumslag_solitar(m, n);
    return is_unimodular(g, spanning_tree(g));
  };
  CHECK(uni(6, 6));
  CHECK(uni(3, -3));
  CHECK_FALSE(uni(2, 4));
  const GbsGraph tree({"u", "v", "w"}, {{"a", 0, 1, 2, 3}, {"b", 1, 2, 5, 7}});
  CHECK(is_unimodular(tree, spanning_tree(tree)));
}

TEST_CASE("normal exponents and certificates") {
  const auto bs22 = baumslag_solitar(2, 2);
  const auto t22 = spanning_tree(bs22);
  CHECK(normal_exponents(bs22, t22) == std::vector<Integer>{2});

  const auto bs2m2 = baumslag_solitar(2, -2);
  const auto t2m2 = spanning_tree(bs2m2);
  CHECK(normal_exponents(bs2m2, t2m2) == std::vector<Integer>{2});
  const auto c = normality_certificate(bs2m2, t2m2, {2});
  REQUIRE(c.checks.size() == 2);
  CHECK(c.checks[0].sign == 1);
  CHECK(c.checks[1].sign == -1);
  CHECK(verify_certificate(bs2m2, t2m2, c));

  const auto bs33 = baumslag_solitar(3, 3);
  const auto c33 = normality_certificate(bs33, spanning_tree(bs33), {3});
  CHECK(c33.checks[0].sign == 1);
  CHECK(c33.checks[1].sign == 1);

  const auto bs23 = baumslag_solitar(2, 3);
  const auto t23 = spanning_tree(bs23);
  for (long k : {1, 2, 3, 6, 12}) {
    CHECK(error_kind([&] { normality_certificate(bs23, t23, {Integer(k)}); }) == ErrorKind::CertificateFailure);
  }
  CHECK(error_kind([&] { normal_exponents(bs23, t23); }) == ErrorKind::NotUnimodular);

  const GbsGraph two({"u", "v"}, {{"e1", 0, 1, 2, 3}, {"e2", 1, 0, 3, 2}});
  const auto tt = spanning_tree(two);
  const auto k = normal_exponents(two, tt);
  CHECK(k == std::vector<Integer>{2, 3});
  CHECK(oracle::least_normal_power(two, tt, 0, 36) == 2);
  CHECK(oracle::least_normal_power(two, tt, 1, 36) == 3);

  const GbsGraph single({"v"}, {});
  CHECK(normal_exponents(single, spanning_tree(single)) == std::vector<Integer>{1});
}

TEST_CASE("normal exponents are minimal on the corpus") {
  std::size_t seen = 0;
  for (const auto& g : oracle::corpus(31, 120)) {
    const auto t = spanning_tree(g);
    if (!is_unimodular(g, t)) continue;
    const auto k = normal_exponents(g, t);
    CHECK(verify_certificate(g, t, normality_certificate(g, t, k)));
    // Small cases only: the oracle tries every power in turn.
    if (k[t.root] > 60) continue;
    for (VertexIndex v = 0; v < k.size(); ++v) {
      CAPTURE(serialize_graph(g));
      CHECK(oracle::least_normal_power(g, t, v, k[v].get_si()) == k[v].get_si());
    }
    // x_v^(k_v) lies in the certified subgroup <z>: it commutes with z.
    const auto z = GroupWord::vertex(t.root, k[t.root]);
    for (VertexIndex v = 0; v < k.size(); ++v) {
      const auto y = GroupWord::vertex(v, k[v]);
      CHECK(is_trivial(commutator(y, z), g, t));
    }
    ++seen;
  }
  CHECK(seen >= 10);
}

TEST_CASE("solvable recognition") {
  const auto bs15 = baumslag_solitar(1, 5);
  auto s = recognize_solvable(bs15, spanning_tree(bs15));
  REQUIRE(s);
  CHECK(s->n == 5);

  const auto bs51 = baumslag_solitar(5, 1);
  s = recognize_solvable(bs51, spanning_tree(bs51));
  REQUIRE(s);
  CHECK(s->n == 5);

  const auto bsm12 = baumslag_solitar(-1, 2);
  s = recognize_solvable(bsm12, spanning_tree(bsm12));
  REQUIRE(s);
  CHECK(s->n == -2);

  const GbsGraph two({"u", "v"}, {{"e1", 0, 1, 1, 2}, {"e2", 1, 0, 1, 3}});
  s = recognize_solvable(two, spanning_tree(two));
  REQUIRE(s);
  CHECK(s->n == 6);

  const GbsGraph hanging({"v", "w"}, {{"e1", 0, 0, 1, 2}, {"e2", 0, 1, 3, 2}});
  CHECK_FALSE(recognize_solvable(hanging, spanning_tree(hanging)).has_value());

  const GbsGraph collapsing({"v", "w"}, {{"e1", 0, 0, 1, 2}, {"e2", 0, 1, 3, -1}});
  s = recognize_solvable(collapsing, spanning_tree(collapsing));
  REQUIRE(s);
  CHECK(s->n == 2);
  CHECK(s->trace.size() == 2);
}

TEST_CASE("classification of examples") {
  CHECK(classify(baumslag_solitar(2, 3)).tag == Tag::NotResiduallyFinite);
  const auto c12 = classify(baumslag_solitar(1, 2));
  CHECK(c12.tag == Tag::SolvableBS);
  CHECK(c12.solvable->n == 2);
  CHECK(c12.linear());
  const GbsGraph rose({"v"}, {{"e1", 0, 0, 1, 2}, {"e2", 0, 0, 1, 3}});
  CHECK(classify(rose).tag == Tag::NotResiduallyFinite);
  CHECK(classify(baumslag_solitar(1, 1)).tag == Tag::Unimodular);
  CHECK(classify(baumslag_solitar(1, -1)).tag == Tag::Unimodular);
  const auto single = classify(GbsGraph({"v"}, {}));
  CHECK(single.tag == Tag::Unimodular);
  CHECK(single.k == std::vector<Integer>{1});
}

TEST_CASE("BS grid matches the closed form") {
  for (long m = -6; m <= 6; ++m) {
    for (long n = -6; n <= 6; ++n) {
      if (m == 0 || n == 0) continue;
      CAPTURE(m);
      CAPTURE(n);
      const auto c = classify(baumslag_solitar(m, n), ClassifyOptions{false, std::nullopt});
      CHECK(tag_name(c.tag) == oracle::bs_tag(m, n));
      CHECK(c.linear() == (c.tag != Tag::NotResiduallyFinite));
    }
  }
}

TEST_CASE("classification does not depend on the spanning tree") {
  std::mt19937_64 rng(99);
  for (const auto& g : oracle::corpus(17, 40)) {
    const auto base = spanning_tree(g);
    const auto tag = classify(g, base, ClassifyOptions{false, std::nullopt}).tag;
    const bool uni = is_unimodular(g, base);
    for (int i = 0; i < 10; ++i) {
      const auto t = random_spanning_tree(g, rng);
      CHECK(is_unimodular(g, t) == uni);
      CHECK(classify(g, t, ClassifyOptions{false, std::nullopt}).tag == tag);
    }
  }
}

TEST_CASE("finite cyclic quotient") {
  const auto bs22 = baumslag_solitar(2, 2);
  const auto t = spanning_tree(bs22);
  const auto p = finite_quotient_graph(bs22, t, {2});
  REQUIRE(p.relators.size() == 2);
  CHECK(format_word(p.relators[1].word, bs22) == "x.v^2");

  const auto bs3m3 = baumslag_solitar(3, -3);
  const auto p3 = finite_quotient_graph(bs3m3, spanning_tree(bs3m3), {3});
  CHECK(format_word(p3.relators[0].word, bs3m3) == "t.e1^-1 * x.v^3 * t.e1 * x.v^3");
  CHECK(format_word(p3.relators[1].word, bs3m3) == "x.v^3");

  const GbsGraph two({"u", "v"}, {{"e1", 0, 1, 2, 3}, {"e2", 1, 0, 3, 2}});
  const auto tt = spanning_tree(two);
  const auto p2 = finite_quotient_graph(two, tt, normal_exponents(two, tt));
  CHECK(p2.relators.size() == 4);

  const auto bs23 = baumslag_solitar(2, 3);
  CHECK(error_kind([&] { finite_quotient_graph(bs23, spanning_tree(bs23), {1}); }) == ErrorKind::NotUnimodular);
}
