#include "gbs/word.hpp"

#include <cstdlib>

namespace gbs {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& letter) {
  if (letter.exponent == 0) return;
  if (!out.empty()) {
    auto& top = out.back();
    if (top.kind == letter.kind && top.index == letter.index) {
      if (letter.is_vertex()) {
        top.exponent += letter.exponent;
        if (top.exponent == 0) out.pop_back();
        return;
      }
      if (top.exponent == -letter.exponent) {
        out.pop_back();
        return;
      }
    }
  }
  out.push_back(letter);
}

}  // namespace

GroupWord::GroupWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (auto& l : letters) {
    if (l.is_stable() && compare_abs(l.exponent, Integer(1)) != 0) {
      // Expand stable powers into single letters.
      int s = sgn(l.exponent);
      for (Integer i = 0; i < ::abs(l.exponent); ++i) push_reduced(letters_, Letter::stable(l.index, s));
      continue;
    }
    push_reduced(letters_, l);
  }
}

GroupWord GroupWord::vertex(VertexIndex v, const Integer& exponent) {
  return GroupWord({Letter::vertex(v, exponent)});
}

GroupWord GroupWord::stable(EdgeIndex e, long exponent) {
  std::vector<Letter> letters;
  int s = exponent < 0 ? -1 : 1;
  for (long i = 0; i < std::labs(exponent); ++i) letters.push_back(Letter::stable(e, s));
  return GroupWord(std::move(letters));
}

std::size_t GroupWord::stable_count() const {
  std::size_t n = 0;
  for (const auto& l : letters_) n += l.is_stable() ? 1 : 0;
  return n;
}

GroupWord invert(const GroupWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(Letter{it->kind, it->index, -it->exponent});
  }
  return GroupWord(std::move(out));
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  std::vector<Letter> out(a.letters());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return GroupWord(std::move(out));
}

GroupWord power(const GroupWord& w, long k) {
  const GroupWord base = k < 0 ? invert(w) : w;
  std::vector<Letter> out;
  for (long i = 0; i < std::labs(k); ++i) out.insert(out.end(), base.letters().begin(), base.letters().end());
  return GroupWord(std::move(out));
}

GroupWord conjugate(const GroupWord& w, const GroupWord& by) { return invert(by) * w * by; }

GroupWord commutator(const GroupWord& a, const GroupWord& b) { return invert(a) * invert(b) * a * b; }

GroupWord operator*(const GroupWord& a, const GroupWord& b) { return concat(a, b); }

std::string format_word(const GroupWord& w, const GbsGraph& g) {
  if (w.empty()) return "1";
  std::string out;
  const auto& letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    const auto& l = letters[i];
    std::string name;
    Integer exponent = l.exponent;
    std::size_t next = i + 1;
    if (l.is_vertex()) {
      name = "x." + g.vertices().at(l.index);
    } else {
      name = "t." + g.edge(l.index).id;
      while (next < letters.size() && letters[next] == l) {
        exponent += l.exponent;
        ++next;
      }
    }
    if (!out.empty()) out += " * ";
    out += name;
    if (exponent != 1) out += "^" + to_string(exponent);
    i = next;
  }
  return out;
}

}  // namespace gbs
