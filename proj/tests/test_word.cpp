#include "gbs/britton.hpp"
#include "gbs/error.hpp"
#include "gbs/quotient.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gbs;

namespace {

struct Fixture {
  GbsGraph g;
  TreeData t;
  Presentation p;

  explicit Fixture(GbsGraph graph) : g(std::move(graph)), t(spanning_tree(g)), p(presentation(g, t)) {}

  GroupWord w(const std::string& text) const { return parse_word(text, p); }
  bool trivial(const std::string& text) const { return is_trivial(w(text), g, t); }
  std::string reduced(const std::string& text) const { return format_word(reduce_word(w(text), g, t), g); }
};

GroupWord random_word(std::mt19937_64& rng, const Presentation& p, int max_len) {
  std::uniform_int_distribution<std::size_t> gen(0, p.generators.size() - 1);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> len(0, max_len);
  std::vector<Letter> letters;
  for (int i = len(rng); i > 0; --i) {
    const auto& s = p.generators[gen(rng)];
    int e = exp(rng);
    letters.push_back(Letter{s.kind, s.index, Integer(e == 0 ? 1 : e)});
  }
  return GroupWord(std::move(letters));
}

}  // namespace

TEST_CASE("word grammar") {
  Fixture f(baumslag_solitar(2, 3));
  CHECK(f.w("x.v^3 * t.e1^-1 * x.v^2").size() == 3);
  CHECK(f.w("x.v^0").empty());
  CHECK(f.w("1").empty());
  CHECK(f.w("x.v*x.v").letters().size() == 1);
  CHECK(f.w("t.e1^2").stable_count() == 2);
  CHECK_THROWS_AS(f.w("t.e9"), Error);
  try {
    f.w("t.e9");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownGenerator);
  }
  for (const char* bad : {"", "x.v^", "x.v *", "* x.v", "x.v^+2", "x.v ^2", "y.v", "x.", "1 * x.v", "x.v^1.5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(f.w(bad), Error);
  }
  CHECK(format_word(f.w("x.v^3 * t.e1^-1 * x.v^2"), f.g) == "x.v^3 * t.e1^-1 * x.v^2");
}

TEST_CASE("word algebra") {
  Fixture f(baumslag_solitar(2, 3));
  CHECK(format_word(invert(f.w("x.v * t.e1")), f.g) == "t.e1^-1 * x.v^-1");
  CHECK(format_word(power(f.w("x.v"), 3), f.g) == "x.v^3");
  CHECK(power(f.w("x.v * t.e1"), 0).empty());
  CHECK(format_word(conjugate(f.w("x.v"), f.w("t.e1")), f.g) == "t.e1^-1 * x.v * t.e1");
  CHECK(concat(f.w("x.v * t.e1"), invert(f.w("x.v * t.e1"))).empty());
  CHECK(format_word(commutator(f.w("x.v"), f.w("t.e1")), f.g) == "x.v^-1 * t.e1^-1 * x.v * t.e1");
}

TEST_CASE("Britton reduction in BS(2,3) and BS(2,4)") {
  Fixture f(baumslag_solitar(2, 3));
  CHECK(f.reduced("t.e1^-1 * x.v^4 * t.e1") == "x.v^6");
  CHECK(f.reduced("t.e1^-1 * x.v * t.e1") == "t.e1^-1 * x.v * t.e1");
  CHECK(f.trivial("t.e1^-1 * x.v^2 * t.e1 * x.v^-3"));
  CHECK_FALSE(f.trivial("x.v * t.e1 * x.v^-1"));
  CHECK(f.trivial("1"));
  CHECK(are_equal(f.w("t.e1^-1 * x.v^2 * t.e1"), f.w("x.v^3"), f.g, f.t));
  CHECK_FALSE(are_equal(f.w("x.v"), f.w("x.v^2"), f.g, f.t));
  const auto pw = britton_reduce(to_path_form(f.w("t.e1^-1 * x.v * t.e1"), f.g, f.t), f.g);
  CHECK(pw.steps.size() == 2);

  Fixture h(baumslag_solitar(2, 4));
  CHECK(h.reduced("t.e1 * x.v^4 * t.e1^-1") == "x.v^2");
  CHECK(h.reduced("t.e1 * x.v^2 * t.e1^-1") == "t.e1 * x.v^2 * t.e1^-1");
}

TEST_CASE("path form through tree edges") {
  Fixture f(GbsGraph({"u", "v"}, {{"e1", 0, 1, 1, 2}, {"e2", 1, 0, 1, 3}}));
  const auto xv = to_path_form(f.w("x.v"), f.g, f.t);
  CHECK(xv.base == 0);
  // Down e1 to v, x_v, back up.
  CHECK(xv.steps == std::vector<Step>{{0, Direction::Forward}, {0, Direction::Backward}});
  CHECK(xv.exponents == std::vector<Integer>{0, 1, 0});
  // x_u = x_v^2 across the tree edge, so x_v^2 reduces to a vertex power at u.
  CHECK(f.reduced("x.v^2") == "x.u");
  CHECK(f.trivial("x.u * x.v^-2"));
  const auto te2 = to_path_form(f.w("t.e2"), f.g, f.t);
  CHECK(te2.steps == std::vector<Step>{{0, Direction::Forward}, {1, Direction::Forward}});
  CHECK(f.trivial("t.e2^-1 * x.v * t.e2 * x.u^-3"));
  CHECK_FALSE(f.trivial("t.e2^-1 * x.u * t.e2 * x.u^-3"));
}

TEST_CASE("zero exponents and identity") {
  Fixture f(baumslag_solitar(2, 3));
  const auto pw = britton_reduce(to_path_form(GroupWord(), f.g, f.t), f.g);
  CHECK(pw.empty());
  CHECK(from_path_form(pw, f.g, f.t).empty());
}

TEST_CASE("padded identities are trivial") {
  // Conjugates of relators multiplied together, on every corpus graph.
  std::mt19937_64 rng(11);
  std::size_t checked = 0;
  for (const auto& g : oracle::corpus(3, 24)) {
    const auto t = spanning_tree(g);
    const auto p = presentation(g, t);
    for (int i = 0; i < 42; ++i) {
      GroupWord w;
      std::uniform_int_distribution<std::size_t> rel(0, p.relators.size() - 1);
      for (int j = 0; j < 3 && !p.relators.empty(); ++j) {
        const auto v = random_word(rng, p, 5);
        auto r = p.relators[rel(rng)].word;
        if (j % 2) r = invert(r);
        w = w * invert(v) * r * v;
      }
      CHECK(is_trivial(w, g, t));
      ++checked;
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("reduction preserves images in finite quotients") {
  std::mt19937_64 rng(5);
  for (const auto& g : oracle::corpus(9, 12)) {
    const auto t = spanning_tree(g);
    const auto p = presentation(g, t);
    const auto homs = symmetric_homs(p, 3, 2000).homs;
    for (int i = 0; i < 30; ++i) {
      const auto w = random_word(rng, p, 10);
      const auto r = reduce_word(w, g, t);
      for (const auto& h : homs) CHECK(evaluate(h, w, p) == evaluate(h, r, p));
      // A pinch-free path with steps is never trivial.
      const auto pw = britton_reduce(to_path_form(w, g, t), g);
      if (!pw.steps.empty()) CHECK_FALSE(is_trivial(w, g, t));
    }
  }
}

TEST_CASE("equality is an equivalence on samples") {
  Fixture f(baumslag_solitar(2, 4));
  std::mt19937_64 rng(2);
  std::vector<GroupWord> words;
  for (int i = 0; i < 12; ++i) words.push_back(random_word(rng, f.p, 4));
  words.push_back(f.w("t.e1^-1 * x.v^2 * t.e1"));
  words.push_back(f.w("x.v^4"));
  for (const auto& a : words) {
    CHECK(are_equal(a, a, f.g, f.t));
    for (const auto& b : words) {
      CHECK(are_equal(a, b, f.g, f.t) == are_equal(b, a, f.g, f.t));
      for (const auto& c : words) {
        if (are_equal(a, b, f.g, f.t) && are_equal(b, c, f.g, f.t)) CHECK(are_equal(a, c, f.g, f.t));
      }
    }
  }
}

TEST_CASE("large exponents stay exact") {
  Fixture f(baumslag_solitar(2, 3));
  CHECK(f.reduced("t.e1^-1 * x.v^2000000000000 * t.e1") == "x.v^3000000000000");
  CHECK(f.trivial("t.e1^-5 * x.v^32 * t.e1^5 * x.v^-243"));
}
