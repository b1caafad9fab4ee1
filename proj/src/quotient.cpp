#include "gbs/quotient.hpp"

#include "gbs/error.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace gbs {

namespace {

// Every permutation of degree <= 8 has order dividing lcm(1..8).
constexpr long kExponentModulus = 840;

long reduce_exponent(const Integer& e, std::uint64_t modulus) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), e.get_mpz_t(), modulus);
  return r.get_si();
}

Permutation small_pow(const Permutation& p, long e) {
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

struct CompiledLetter {
  std::size_t generator;
  Integer exponent;
};

std::vector<std::size_t> stable_slots(const Presentation& p) {
  std::size_t max_edge = 0;
  for (const auto& gen : p.generators) {
    if (gen.kind == Letter::Kind::Stable) max_edge = std::max(max_edge, gen.index + 1);
  }
  std::vector<std::size_t> slots(max_edge, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (p.generators[i].kind == Letter::Kind::Stable) slots[p.generators[i].index] = i;
  }
  return slots;
}

std::vector<CompiledLetter> compile(const GroupWord& w, const std::vector<std::size_t>& slots) {
  std::vector<CompiledLetter> out;
  for (const auto& l : w.letters()) {
    std::size_t gen;
    if (l.is_vertex()) {
      gen = l.index;
    } else {
      if (l.index >= slots.size() || slots[l.index] == static_cast<std::size_t>(-1)) {
        throw Error(ErrorKind::UnknownGenerator, "stable letter of a tree edge");
      }
      gen = slots[l.index];
    }
    out.push_back(CompiledLetter{gen, l.exponent});
  }
  return out;
}

}  // namespace

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_images(const std::vector<std::uint8_t>& images) {
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(images.size());
  std::copy(images.begin(), images.end(), p.images_.begin());
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  Permutation out;
  out.degree_ = degree_;
  for (std::size_t i = 0; i < degree_; ++i) out.images_[i] = other.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.degree_ = degree_;
  for (std::size_t i = 0; i < degree_; ++i) out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Permutation Permutation::pow(const Integer& exponent) const {
  return small_pow(*this, reduce_exponent(exponent, kExponentModulus));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree_; ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::array<bool, kMaxPermutationDegree> seen{};
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    std::uint64_t length = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string Permutation::cycle_notation() const {
  std::string out;
  std::array<bool, kMaxPermutationDegree> seen{};
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<std::uint8_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

FiniteElement evaluate(const FiniteHom& h, const GroupWord& w, const Presentation& p) {
  auto letters = compile(w, stable_slots(p));
  if (h.target.family == FiniteTarget::Family::Cyclic) {
    const auto k = h.target.size;
    Residue acc = 0;
    for (const auto& l : letters) {
      auto image = std::get<Residue>(h.images[l.generator]);
      auto e = static_cast<Residue>(reduce_exponent(l.exponent, k));
      acc = static_cast<Residue>((acc + (image * e) % k) % k);
    }
    return acc;
  }
  auto acc = Permutation::identity(h.target.size);
  for (const auto& l : letters) acc = acc * std::get<Permutation>(h.images[l.generator]).pow(l.exponent);
  return acc;
}

bool is_identity(const FiniteElement& e) {
  if (const auto* perm = std::get_if<Permutation>(&e)) return perm->is_identity();
  return std::get<Residue>(e) == 0;
}

bool is_killed(const FiniteHom& h, const GroupWord& w, const Presentation& p) {
  return is_identity(evaluate(h, w, p));
}

bool is_homomorphism(const FiniteHom& h, const Presentation& p) {
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [&](const Relator& r) { return is_killed(h, r.word, p); });
}

std::string render_element(const FiniteElement& e) {
  if (const auto* perm = std::get_if<Permutation>(&e)) return perm->cycle_notation();
  return std::to_string(std::get<Residue>(e));
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  IntegerMatrix out(rows, other.cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols; ++j) out.at(i, j) += at(i, k) * other.at(k, j);
    }
  }
  return out;
}

std::vector<Integer> AbelianizationData::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : invariant_factors) {
    if (d != 1) out.push_back(d);
  }
  return out;
}

std::vector<Integer> exponent_sums(const GroupWord& w, const Presentation& p) {
  std::vector<Integer> sums(p.generators.size());
  for (const auto& l : compile(w, stable_slots(p))) sums[l.generator] += l.exponent;
  return sums;
}

namespace {

// Row and column operations on the working matrix, mirrored onto the
// transforms and their inverses.
class SmithReducer {
 public:
  explicit SmithReducer(AbelianizationData& data) : d_(data) {}

  void add_row(std::size_t target, std::size_t source, const Integer& c) {
    auto& m = d_.diagonal;
    for (std::size_t j = 0; j < m.cols; ++j) m.at(target, j) += c * m.at(source, j);
    for (std::size_t j = 0; j < d_.left.cols; ++j) d_.left.at(target, j) += c * d_.left.at(source, j);
    auto& li = d_.left_inverse;
    for (std::size_t i = 0; i < li.rows; ++i) li.at(i, source) -= c * li.at(i, target);
  }

  void add_col(std::size_t target, std::size_t source, const Integer& c) {
    auto& m = d_.diagonal;
    for (std::size_t i = 0; i < m.rows; ++i) m.at(i, target) += c * m.at(i, source);
    for (std::size_t i = 0; i < d_.right.rows; ++i) d_.right.at(i, target) += c * d_.right.at(i, source);
    auto& ri = d_.right_inverse;
    for (std::size_t j = 0; j < ri.cols; ++j) ri.at(source, j) -= c * ri.at(target, j);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d_.diagonal.cols; ++j) std::swap(d_.diagonal.at(a, j), d_.diagonal.at(b, j));
    for (std::size_t j = 0; j < d_.left.cols; ++j) std::swap(d_.left.at(a, j), d_.left.at(b, j));
    for (std::size_t i = 0; i < d_.left_inverse.rows; ++i) {
      std::swap(d_.left_inverse.at(i, a), d_.left_inverse.at(i, b));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d_.diagonal.rows; ++i) std::swap(d_.diagonal.at(i, a), d_.diagonal.at(i, b));
    for (std::size_t i = 0; i < d_.right.rows; ++i) std::swap(d_.right.at(i, a), d_.right.at(i, b));
    for (std::size_t j = 0; j < d_.right_inverse.cols; ++j) {
      std::swap(d_.right_inverse.at(a, j), d_.right_inverse.at(b, j));
    }
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d_.diagonal.cols; ++j) d_.diagonal.at(r, j) = -d_.diagonal.at(r, j);
    for (std::size_t j = 0; j < d_.left.cols; ++j) d_.left.at(r, j) = -d_.left.at(r, j);
    for (std::size_t i = 0; i < d_.left_inverse.rows; ++i) d_.left_inverse.at(i, r) = -d_.left_inverse.at(i, r);
  }

  void run() {
    auto& m = d_.diagonal;
    const std::size_t limit = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m.rows; ++i) {
          if (m.at(i, t) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
          add_row(i, t, -q);
          if (m.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < m.cols; ++j) {
          if (m.at(t, j) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
          add_col(j, t, -q);
          if (m.at(t, j) != 0) clean = false;
        }
        if (clean) {
          // Divisibility: fold any offending row into the pivot row.
          auto offending = find_non_multiple(t);
          if (!offending) break;
          add_row(t, *offending, 1);
        }
        place_pivot(t);
      }
      if (m.at(t, t) < 0) negate_row(t);
    }
  }

 private:
  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    auto& m = d_.diagonal;
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m.rows; ++i) {
      for (std::size_t j = t; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (!best || compare_abs(m.at(i, j), m.at(best->first, best->second)) < 0) best = {i, j};
      }
    }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  std::optional<std::size_t> find_non_multiple(std::size_t t) const {
    const auto& m = d_.diagonal;
    for (std::size_t i = t + 1; i < m.rows; ++i) {
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        if (!mpz_divisible_p(m.at(i, j).get_mpz_t(), m.at(t, t).get_mpz_t())) return i;
      }
    }
    return std::nullopt;
  }

  AbelianizationData& d_;
};

}  // namespace

AbelianizationData abelianization(const Presentation& p) {
  AbelianizationData data;
  const auto rows = p.relators.size();
  const auto cols = p.generators.size();
  data.relations = IntegerMatrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto sums = exponent_sums(p.relators[i].word, p);
    for (std::size_t j = 0; j < cols; ++j) data.relations.at(i, j) = sums[j];
  }
  data.diagonal = data.relations;
  data.left = data.left_inverse = IntegerMatrix::identity(rows);
  data.right = data.right_inverse = IntegerMatrix::identity(cols);
  SmithReducer(data).run();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    if (data.diagonal.at(t, t) == 0) break;
    data.invariant_factors.push_back(data.diagonal.at(t, t));
  }
  data.free_rank = cols - data.invariant_factors.size();
  return data;
}

std::vector<FiniteHom> cyclic_homs(const Presentation& p, std::uint64_t order) {
  return cyclic_homs(p, abelianization(p), order);
}

std::vector<FiniteHom> cyclic_homs(const Presentation& p, const AbelianizationData& ab, std::uint64_t order) {
  const auto n = p.generators.size();
  const Integer k(static_cast<unsigned long>(order));
  // Coordinates b = right^-1 a: b_i ranges over multiples of k / gcd(d_i, k)
  // on the diagonal and over all of Z/k on the free part.
  std::vector<std::uint64_t> step(n), count(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < ab.invariant_factors.size()) {
      auto g = gcd(ab.invariant_factors[i], k).get_ui();
      step[i] = order / g;
      count[i] = g;
    } else {
      step[i] = 1;
      count[i] = order;
    }
  }
  std::vector<FiniteHom> homs;
  std::vector<std::uint64_t> digits(n, 0);
  for (;;) {
    FiniteHom h;
    h.target = FiniteTarget{FiniteTarget::Family::Cyclic, order};
    for (std::size_t r = 0; r < n; ++r) {
      Integer acc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        acc += ab.right.at(r, c) * static_cast<unsigned long>(digits[c] * step[c]);
      }
      h.images.emplace_back(static_cast<Residue>(reduce_exponent(acc, order)));
    }
    homs.push_back(std::move(h));
    std::size_t i = 0;
    while (i < n && ++digits[i] == count[i]) digits[i++] = 0;
    if (i == n) break;
  }
  std::sort(homs.begin(), homs.end(), [](const FiniteHom& a, const FiniteHom& b) {
    return std::lexicographical_compare(a.images.begin(), a.images.end(), b.images.begin(), b.images.end(),
                                        [](const FiniteElement& x, const FiniteElement& y) {
                                          return std::get<Residue>(x) < std::get<Residue>(y);
                                        });
  });
  return homs;
}

SearchStats for_each_symmetric_hom(const Presentation& p, std::size_t degree,
                                   const std::function<bool(const FiniteHom&)>& visit) {
  if (degree == 0 || degree > kMaxPermutationDegree) {
    throw Error(ErrorKind::PreconditionViolated, "symmetric degree must be in 1.." +
                                                     std::to_string(kMaxPermutationDegree));
  }
  const auto n = p.generators.size();
  const auto perms = all_permutations(degree);
  const auto slots = stable_slots(p);

  // Relators become checkable once their last generator is assigned.
  struct Check {
    std::vector<std::pair<std::size_t, long>> letters;
  };
  std::vector<std::vector<Check>> checks(n);
  for (const auto& r : p.relators) {
    Check c;
    std::size_t ready = 0;
    for (const auto& l : compile(r.word, slots)) {
      c.letters.emplace_back(l.generator, reduce_exponent(l.exponent, kExponentModulus));
      ready = std::max(ready, l.generator);
    }
    if (!c.letters.empty()) checks[ready].push_back(std::move(c));
  }

  std::vector<std::size_t> choice(n, 0);
  std::vector<const Permutation*> assigned(n, nullptr);
  SearchStats stats;

  auto satisfied = [&](std::size_t depth) {
    for (const auto& c : checks[depth]) {
      auto acc = Permutation::identity(degree);
      for (const auto& [gen, e] : c.letters) acc = acc * small_pow(*assigned[gen], e);
      if (!acc.is_identity()) return false;
    }
    return true;
  };

  if (n == 0) {
    stats.found = 1;
    FiniteHom h{FiniteTarget{FiniteTarget::Family::Symmetric, degree}, {}};
    stats.stopped = !visit(h);
    return stats;
  }

  std::size_t depth = 0;
  choice[0] = 0;
  for (;;) {
    if (choice[depth] == perms.size()) {
      if (depth == 0) break;
      --depth;
      ++choice[depth];
      continue;
    }
    ++stats.nodes;
    assigned[depth] = &perms[choice[depth]];
    if (!satisfied(depth)) {
      ++choice[depth];
      continue;
    }
    if (depth + 1 < n) {
      ++depth;
      choice[depth] = 0;
      continue;
    }
    ++stats.found;
    FiniteHom h{FiniteTarget{FiniteTarget::Family::Symmetric, degree}, {}};
    for (auto* perm : assigned) h.images.emplace_back(*perm);
    if (!visit(h)) {
      stats.stopped = true;
      break;
    }
    ++choice[depth];
  }
  return stats;
}

SymmetricSearch symmetric_homs(const Presentation& p, std::size_t degree, std::uint64_t limit) {
  SymmetricSearch out;
  auto stats = for_each_symmetric_hom(p, degree, [&](const FiniteHom& h) {
    if (out.homs.size() >= limit) {
      out.limit_exceeded = true;
      return false;
    }
    out.homs.push_back(h);
    return true;
  });
  out.nodes = stats.nodes;
  return out;
}

ProbeReport rf_probe(const GbsGraph& g, const TreeData& t, const GroupWord& w, const ProbeBounds& bounds) {
  if (is_trivial(w, g, t)) {
    throw Error(ErrorKind::TrivialWordRejected, "word is trivial in the group; nothing to separate");
  }
  const auto started = std::chrono::steady_clock::now();
  const auto p = presentation(g, t);
  ProbeReport report;
  report.word = w;
  report.bounds = bounds;

  auto note = [&](const FiniteHom& h) {
    if (!report.separating_hom && !is_killed(h, w, p)) {
      report.separating_hom = h;
      report.killed_in_all = false;
    }
  };

  const auto ab = abelianization(p);
  for (std::uint64_t k = 1; k <= bounds.cyc_max; ++k) {
    for (const auto& h : cyclic_homs(p, ab, k)) {
      ++report.cyclic_homs_found;
      note(h);
    }
  }
  std::uint64_t budget = bounds.limit;
  for (std::size_t d = 1; d <= bounds.sym_max && !report.limit_exceeded; ++d) {
    auto stats = for_each_symmetric_hom(p, d, [&](const FiniteHom& h) {
      if (report.symmetric_homs_found >= budget) {
        report.limit_exceeded = true;
        return false;
      }
      ++report.symmetric_homs_found;
      note(h);
      return true;
    });
    report.search_nodes += stats.nodes;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace gbs
