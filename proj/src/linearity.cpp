#include "gbs/linearity.hpp"

#include "gbs/britton.hpp"
#include "gbs/error.hpp"

#include <random>

namespace gbs {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorKind::PreconditionViolated, "matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  RationalMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const auto& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out.at(i, j) += a * other.at(k, j);
    }
  }
  for (auto& e : out.entries_) e.canonicalize();
  return out;
}

RationalMatrix RationalMatrix::inverse() const {
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n_) throw Error(ErrorKind::PreconditionViolated, "matrix is singular");
    for (std::size_t j = 0; j < n_; ++j) {
      std::swap(a.at(col, j), a.at(pivot, j));
      std::swap(inv.at(col, j), inv.at(pivot, j));
    }
    const Rational scale = a.at(col, col);
    for (std::size_t j = 0; j < n_; ++j) {
      a.at(col, j) /= scale;
      inv.at(col, j) /= scale;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      const Rational f = a.at(i, col);
      for (std::size_t j = 0; j < n_; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  for (auto& e : inv.entries_) e.canonicalize();
  return inv;
}

RationalMatrix RationalMatrix::pow(const Integer& exponent) const {
  RationalMatrix base = exponent < 0 ? inverse() : *this;
  Integer e = abs(exponent);
  RationalMatrix out = identity(n_);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

Rational RationalMatrix::trace() const {
  Rational s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += at(i, i);
  return s;
}

bool RationalMatrix::is_identity() const { return *this == identity(n_); }

RationalMatrix evaluate_rep(const MatrixRep& rep, const GroupWord& w) {
  RationalMatrix out = RationalMatrix::identity(rep.dimension);
  for (const auto& letter : w.letters()) {
    auto gen = rep.presentation.generator_of(letter);
    if (!gen) continue;  // stable letter of a tree edge
    out = out * rep.images.at(*gen).pow(letter.exponent);
  }
  return out;
}

bool relators_hold(const MatrixRep& rep) {
  for (const auto& r : rep.presentation.relators) {
    if (!evaluate_rep(rep, r.word).is_identity()) return false;
  }
  return true;
}

MatrixRep bs1n_rep(const Integer& n) {
  if (n == 0) throw Error(ErrorKind::NotSolvableForm, "BS(1, 0) is not a GBS group");
  const auto g = baumslag_solitar(1, n);
  MatrixRep rep;
  rep.dimension = 2;
  rep.presentation = presentation(g, spanning_tree(g));
  Rational inv_n(1, n);
  inv_n.canonicalize();
  rep.images = {RationalMatrix::from_rows({{1, 1}, {0, 1}}), RationalMatrix::from_rows({{inv_n, 0}, {0, 1}})};
  rep.verified = relators_hold(rep);
  return rep;
}

MatrixRep affine_rep(const GbsGraph& g, const TreeData& t) {
  const auto m = modular_map(g, t);
  MatrixRep rep;
  rep.dimension = 2;
  rep.presentation = presentation(g, t);
  for (const auto& gen : rep.presentation.generators) {
    if (gen.kind == Letter::Kind::Vertex) {
      rep.images.push_back(RationalMatrix::from_rows({{1, m.value[gen.index]}, {0, 1}}));
    } else {
      rep.images.push_back(RationalMatrix::from_rows({{m.cycle_ratio.at(gen.index), 0}, {0, 1}}));
    }
  }
  rep.verified = relators_hold(rep);
  return rep;
}

FaithfulnessReport faithfulness_check(const MatrixRep& rep, const GbsGraph& g, const TreeData& t,
                                      std::uint64_t samples, std::uint64_t seed) {
  FaithfulnessReport report;
  report.samples = samples;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  const auto& gens = rep.presentation.generators;
  std::uniform_int_distribution<std::size_t> pick_gen(0, gens.size() - 1);
  std::uniform_int_distribution<int> pick_exp(-5, 5);
  std::uniform_int_distribution<int> pick_len(0, 20);
  std::uniform_int_distribution<int> pick_kind(0, 3);

  auto random_word = [&](int max_len) {
    std::vector<Letter> letters;
    const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    for (int i = 0; i < len; ++i) {
      const auto& gen = gens[pick_gen(rng)];
      int e = pick_exp(rng);
      if (e == 0) e = 1;
      letters.push_back(Letter{gen.kind, gen.index, Integer(e)});
    }
    return GroupWord(std::move(letters));
  };

  for (std::uint64_t i = 0; i < samples; ++i) {
    GroupWord w;
    if (pick_kind(rng) == 0 && !rep.presentation.relators.empty()) {
      std::uniform_int_distribution<std::size_t> pick_rel(0, rep.presentation.relators.size() - 1);
      auto r = rep.presentation.relators[pick_rel(rng)].word;
      if (pick_kind(rng) % 2) r = invert(r);
      const auto v = random_word(6);
      w = v * r * invert(v);
    } else {
      w = random_word(20);
    }
    const bool matrix_trivial = evaluate_rep(rep, w).is_identity();
    const bool word_trivial = is_trivial(w, g, t);
    if (word_trivial) ++report.trivial;
    if (matrix_trivial != word_trivial) {
      ++report.disagreements;
      if (report.counterexamples.size() < 5) report.counterexamples.push_back(w);
    }
  }
  return report;
}

MatrixRep induce(const SubgroupRep& sub, std::size_t sub_dimension, const CosetTable& table, const GbsGraph& g,
                 const TreeData& t) {
  const auto p = presentation(g, t);
  const auto r = table.index();
  if (r == 0 || !table.representatives[0].empty()) {
    throw Error(ErrorKind::InconsistentCosetTable, "representative 0 must be the identity");
  }
  if (table.action.size() != r) throw Error(ErrorKind::InconsistentCosetTable, "one action row per coset expected");
  for (std::size_t s = 0; s < p.generators.size(); ++s) {
    std::vector<bool> hit(r, false);
    for (std::size_t j = 0; j < r; ++j) {
      if (table.action[j].size() != p.generators.size()) {
        throw Error(ErrorKind::InconsistentCosetTable, "one action entry per generator expected");
      }
      const auto& a = table.action[j][s];
      if (a.target >= r || hit[a.target]) {
        throw Error(ErrorKind::InconsistentCosetTable, p.generators[s].name + " does not permute the cosets");
      }
      hit[a.target] = true;
      const auto lhs = p.generators[s].word() * table.representatives[j];
      const auto rhs = table.representatives[a.target] * a.element;
      if (!are_equal(lhs, rhs, g, t)) {
        throw Error(ErrorKind::InconsistentCosetTable,
                    "entry for " + p.generators[s].name + " on coset " + std::to_string(j) + " is not a Schreier identity");
      }
    }
  }
  MatrixRep rep;
  rep.dimension = r * sub_dimension;
  rep.presentation = p;
  for (std::size_t s = 0; s < p.generators.size(); ++s) {
    RationalMatrix m(rep.dimension);
    for (std::size_t j = 0; j < r; ++j) {
      const auto& a = table.action[j][s];
      const auto block = sub(a.element);
      if (block.size() != sub_dimension) throw Error(ErrorKind::PreconditionViolated, "subgroup image has wrong size");
      for (std::size_t x = 0; x < sub_dimension; ++x) {
        for (std::size_t y = 0; y < sub_dimension; ++y) {
          m.at(a.target * sub_dimension + x, j * sub_dimension + y) = block.at(x, y);
        }
      }
    }
    rep.images.push_back(std::move(m));
  }
  rep.verified = relators_hold(rep);
  return rep;
}

OrientationCharacter orientation_character(const GbsGraph& g, const TreeData& t, const NormalityCertificate& c) {
  const auto p = presentation(g, t);
  OrientationCharacter out;
  out.signs.assign(p.generators.size(), 1);
  for (const auto& check : c.checks) out.signs.at(check.generator) = check.sign;

  std::optional<std::size_t> flip;
  for (std::size_t i = 0; i < out.signs.size() && !flip; ++i) {
    if (out.signs[i] < 0) flip = i;
  }
  auto& table = out.kernel;
  table.representatives.push_back(GroupWord());
  if (!flip) {
    table.action.emplace_back();
    for (const auto& gen : p.generators) table.action[0].push_back(CosetAction{0, gen.word()});
    return out;
  }
  const auto s = p.generators[*flip].word();
  table.representatives.push_back(s);
  table.action.resize(2);
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    const auto gen = p.generators[i].word();
    if (out.signs[i] > 0) {
      table.action[0].push_back(CosetAction{0, gen});
      table.action[1].push_back(CosetAction{1, invert(s) * gen * s});
    } else {
      table.action[0].push_back(CosetAction{1, invert(s) * gen});
      table.action[1].push_back(CosetAction{0, gen * s});
    }
  }
  return out;
}

}  // namespace gbs
