#include "gbs/britton.hpp"

#include "gbs/error.hpp"

#include <cctype>

namespace gbs {

namespace {

// Stable powers expand letter by letter; keep parsed input bounded.
constexpr long kMaxStablePower = 1000000;

class WordParser {
 public:
  WordParser(std::string_view text, const Presentation& p) : text_(text), p_(p) {}

  GroupWord parse() {
    if (text_ == "1") return {};
    std::vector<Letter> letters;
    term(letters);
    while (pos_ < text_.size()) {
      skip_ws();
      expect('*');
      skip_ws();
      term(letters);
    }
    return GroupWord(std::move(letters));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Syntax, "word syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void term(std::vector<Letter>& letters) {
    if (pos_ + 1 >= text_.size() || (text_[pos_] != 'x' && text_[pos_] != 't') || text_[pos_ + 1] != '.') {
      fail("expected generator 'x.<id>' or 't.<id>'");
    }
    auto start = pos_;
    pos_ += 2;
    auto id_start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (pos_ == id_start) fail("empty generator id");
    auto name = text_.substr(start, pos_ - start);

    Integer exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      auto int_start = pos_;
      if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
      auto digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == digits) fail("expected integer exponent");
      exponent = *parse_integer(text_.substr(int_start, pos_ - int_start));
    }

    auto gen = p_.find(name);
    if (!gen) throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + std::string(name) + "'");
    const auto& generator = p_.generators[*gen];
    if (generator.kind == Letter::Kind::Vertex) {
      letters.push_back(Letter::vertex(generator.index, exponent));
      return;
    }
    if (compare_abs(exponent, Integer(kMaxStablePower)) > 0) fail("stable letter exponent too large");
    long k = exponent.get_si();
    for (long i = 0; i < std::labs(k); ++i) letters.push_back(Letter::stable(generator.index, k < 0 ? -1 : 1));
  }

  std::string_view text_;
  const Presentation& p_;
  std::size_t pos_ = 0;
};

void append_walk(PathWord& pw, const std::vector<Step>& walk) {
  for (const auto& s : walk) {
    pw.steps.push_back(s);
    pw.exponents.emplace_back(0);
  }
}

}  // namespace

GroupWord parse_word(std::string_view text, const Presentation& p) {
  return WordParser(text, p).parse();
}

PathWord to_path_form(const GroupWord& w, const GbsGraph& g, const TreeData& t) {
  PathWord out;
  out.base = t.root;
  for (const auto& l : w.letters()) {
    if (l.is_vertex()) {
      append_walk(out, tree_path(g, t, t.root, l.index));
      out.exponents.back() += l.exponent;
      append_walk(out, tree_path(g, t, l.index, t.root));
      continue;
    }
    Step crossing{l.index, l.exponent > 0 ? Direction::Forward : Direction::Backward};
    auto start = g.source(crossing);
    append_walk(out, tree_path(g, t, t.root, start));
    append_walk(out, {crossing});
    append_walk(out, tree_path(g, t, g.target(crossing), t.root));
  }
  return out;
}

GroupWord from_path_form(const PathWord& pw, const GbsGraph& g, const TreeData& t) {
  std::vector<Letter> letters;
  VertexIndex at = pw.base;
  for (std::size_t i = 0; i < pw.exponents.size(); ++i) {
    if (i > 0) {
      const auto& s = pw.steps[i - 1];
      if (!t.in_tree[s.edge]) letters.push_back(Letter::stable(s.edge, s.dir == Direction::Forward ? 1 : -1));
      at = g.target(s);
    }
    letters.push_back(Letter::vertex(at, pw.exponents[i]));
  }
  return GroupWord(std::move(letters));
}

PathWord britton_reduce(const PathWord& pw, const GbsGraph& g) {
  PathWord out;
  out.base = pw.base;
  out.exponents = {pw.exponents.front()};
  for (std::size_t i = 0; i < pw.steps.size(); ++i) {
    const Step incoming = pw.steps[i];
    if (!out.steps.empty()) {
      const Step top = out.steps.back();
      if (top.edge == incoming.edge && top.dir == opposite(incoming.dir)) {
        // The middle power sits at the end `top` arrived at.
        if (auto q = divide_exact(out.exponents.back(), g.exiting_label(top))) {
          out.steps.pop_back();
          out.exponents.pop_back();
          out.exponents.back() += *q * g.entering_label(top) + pw.exponents[i + 1];
          continue;
        }
      }
    }
    out.steps.push_back(incoming);
    out.exponents.push_back(pw.exponents[i + 1]);
  }
  return out;
}

bool is_trivial(const GroupWord& w, const GbsGraph& g, const TreeData& t) {
  return britton_reduce(to_path_form(w, g, t), g).empty();
}

bool are_equal(const GroupWord& a, const GroupWord& b, const GbsGraph& g, const TreeData& t) {
  return is_trivial(a * invert(b), g, t);
}

GroupWord reduce_word(const GroupWord& w, const GbsGraph& g, const TreeData& t) {
  return from_path_form(britton_reduce(to_path_form(w, g, t), g), g, t);
}

}  // namespace gbs
