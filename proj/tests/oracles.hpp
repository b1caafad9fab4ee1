#pragma once

// Reference computations for the test suites. Each one takes a different
// route from the library code it checks: exhaustive enumeration, minors
// instead of elimination, closed forms instead of the general algorithm.

#include "gbs/britton.hpp"
#include "gbs/graph.hpp"
#include "gbs/presentation.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using gbs::GbsGraph;
using gbs::GroupWord;
using gbs::Presentation;

// Residual finiteness of BS(m, n) by the closed form.
inline std::string bs_tag(long m, long n) {
  const long a = std::labs(m), b = std::labs(n);
  if (a == b) return "Unimodular";
  if (std::min(a, b) == 1) return "SolvableBS";
  return "NotResiduallyFinite";
}

// Exponent sums per generator, read letter by letter.
inline std::vector<long long> exponent_row(const GroupWord& w, const Presentation& p) {
  std::vector<long long> row(p.generators.size(), 0);
  for (const auto& l : w.letters()) {
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      if (p.generators[i].kind == l.kind && p.generators[i].index == l.index) row[i] += l.exponent.get_si();
    }
  }
  return row;
}

inline long long determinant(std::vector<std::vector<long long>> m) {
  // Laplace expansion along the first row; matrices here are tiny.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * m[0][c] * determinant(minor);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<long long> torsion;  // factors > 1, each dividing the next
};

// Invariant factors as ratios of determinantal divisors: d_k is the gcd of
// all k x k minors of the relation matrix.
inline AbelianGroup abelian_group(const Presentation& p) {
  std::vector<std::vector<long long>> rel;
  for (const auto& r : p.relators) rel.push_back(exponent_row(r.word, p));
  const std::size_t rows = rel.size(), cols = p.generators.size();
  std::vector<long long> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& ri : rs) {
      for (const auto& ci : cs) {
        std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) m[a][b] = rel[ri[a]][ci[b]];
        }
        g = std::gcd(g, std::llabs(determinant(m)));
      }
    }
    if (g == 0) break;
    divisors.push_back(g);
  }
  AbelianGroup out;
  const std::size_t rank = divisors.size() - 1;
  out.free_rank = cols - rank;
  for (std::size_t k = 1; k <= rank; ++k) {
    const long long f = divisors[k] / divisors[k - 1];
    if (f > 1) out.torsion.push_back(f);
  }
  return out;
}

// Homomorphisms to Z/k: every assignment, relators checked by exponent sums.
inline std::uint64_t count_cyclic_homs(const Presentation& p, long long k) {
  const std::size_t n = p.generators.size();
  std::vector<std::vector<long long>> rel;
  for (const auto& r : p.relators) rel.push_back(exponent_row(r.word, p));
  std::vector<long long> a(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& row : rel) {
      long long s = 0;
      for (std::size_t i = 0; i < n; ++i) s += row[i] * a[i];
      if (((s % k) + k) % k != 0) ok = false;
    }
    count += ok ? 1 : 0;
    std::size_t i = 0;
    while (i < n && ++a[i] == k) a[i++] = 0;
    if (i == n) break;
  }
  return count;
}

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

inline Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

inline Perm evaluate(const std::vector<Perm>& images, const GroupWord& w, const Presentation& p, std::size_t d) {
  Perm out(d);
  std::iota(out.begin(), out.end(), 0);
  for (const auto& l : w.letters()) {
    std::size_t gen = p.generators.size();
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      if (p.generators[i].kind == l.kind && p.generators[i].index == l.index) gen = i;
    }
    if (gen == p.generators.size()) continue;  // trivial tree letter
    const Perm step = l.exponent > 0 ? images[gen] : inverse(images[gen]);
    for (long k = 0; k < std::labs(l.exponent.get_si()); ++k) out = compose(out, step);
  }
  return out;
}

inline std::vector<Perm> all_perms(std::size_t d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every tuple of permutations, kept when all relators evaluate to the
// identity. Returns the image tuples in lexicographic order.
inline std::vector<std::vector<Perm>> symmetric_homs(const Presentation& p, std::size_t d) {
  const auto perms = all_perms(d);
  const std::size_t n = p.generators.size();
  Perm id(d);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::size_t> idx(n, 0);
  std::vector<std::vector<Perm>> out;
  while (true) {
    std::vector<Perm> images;
    for (auto i : idx) images.push_back(perms[i]);
    bool ok = true;
    for (const auto& r : p.relators) {
      if (evaluate(images, r.word, p, d) != id) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(images);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < perms.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

// Least k with <x_v^k> normal, by testing every generator against both
// signs for k = 1, 2, ... up to `bound`. Zero when none qualifies.
inline long least_normal_power(const GbsGraph& g, const gbs::TreeData& t, gbs::VertexIndex v, long bound) {
  const auto p = gbs::presentation(g, t);
  for (long k = 1; k <= bound; ++k) {
    const auto z = GroupWord::vertex(v, k);
    bool normal = true;
    for (const auto& gen : p.generators) {
      const auto s = gen.word();
      const auto conj = s * z * gbs::invert(s);
      if (!gbs::are_equal(conj, z, g, t) && !gbs::are_equal(conj, gbs::invert(z), g, t)) {
        normal = false;
        break;
      }
    }
    if (normal) return k;
  }
  return 0;
}

// Random connected graph: a random tree on `vertices` vertices plus `extra`
// further edges (loops and parallel edges allowed), labels in [-6, 6] \ {0}.
inline GbsGraph random_graph(std::mt19937_64& rng, std::size_t vertices, std::size_t extra) {
  std::uniform_int_distribution<int> label(-6, 5);
  auto draw = [&] {
    int v = label(rng);
    return v >= 0 ? v + 1 : v;
  };
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vertices; ++i) names.push_back("v" + std::to_string(i));
  std::vector<gbs::EdgeRecord> edges;
  for (std::size_t i = 1; i < vertices; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    edges.push_back({"e" + std::to_string(edges.size() + 1), parent(rng), i, draw(), draw()});
  }
  std::uniform_int_distribution<std::size_t> any(0, vertices - 1);
  for (std::size_t i = 0; i < extra; ++i) {
    edges.push_back({"e" + std::to_string(edges.size() + 1), any(rng), any(rng), draw(), draw()});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return GbsGraph(names, edges);
}

// Corpus of graphs with betti numbers 0..3 and up to 4 vertices.
inline std::vector<GbsGraph> corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<GbsGraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t vertices = 1 + i % 4;
    const std::size_t betti = (i / 4) % 4;
    out.push_back(random_graph(rng, vertices, betti));
  }
  return out;
}

}  // namespace oracle
