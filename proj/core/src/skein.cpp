#include "gordian/skein.hpp"

#include <cctype>

#include "gordian/diagram.hpp"

namespace gordian {

namespace {

LaurentPoly x_poly(int e, const Integer& c = 1) { return LaurentPoly::monomial(c, e, 'x'); }

}  // namespace

SkeinPtr SkeinNode::unknot() {
  static const SkeinPtr u(new SkeinNode());
  return u;
}

SkeinPtr SkeinNode::resolve(SkeinRole role, SkeinPtr switched, SkeinPtr smoothed) {
  if (!switched || !smoothed) throw ValidationError("skein resolve node needs two children");
  if (!switched->is_knot()) throw ValidationError("switched child of a skein triple must be a knot node");
  if (smoothed->kind() != SkeinKind::TwoComponent)
    throw ValidationError("smoothed child of a skein triple must be a two-component node");
  auto* n = new SkeinNode();
  n->kind_ = SkeinKind::Resolve;
  n->role_ = role;
  n->a_ = std::move(switched);
  n->b_ = std::move(smoothed);
  return SkeinPtr(n);
}

SkeinPtr SkeinNode::two_component(int lambda, SkeinPtr comp1, SkeinPtr comp2) {
  if (!comp1 || !comp2) throw ValidationError("two-component node needs two children");
  if (!comp1->is_knot() || !comp2->is_knot()) throw ValidationError("components of a two-component node must be knots");
  auto* n = new SkeinNode();
  n->kind_ = SkeinKind::TwoComponent;
  n->lambda_ = lambda;
  n->a_ = std::move(comp1);
  n->b_ = std::move(comp2);
  return SkeinPtr(n);
}

int SkeinNode::depth() const {
  if (kind_ == SkeinKind::Unknot) return 0;
  return 1 + std::max(a_->depth(), b_->depth());
}

LaurentPoly eval_c0(const SkeinNode& node) {
  switch (node.kind()) {
    case SkeinKind::Unknot:
      return x_poly(0);
    case SkeinKind::Resolve: {
      LaurentPoly sw = eval_c0(*node.first()), sm = eval_c0(*node.second());
      if (node.role() == SkeinRole::Plus) return (sw + sm).shifted(-1);
      return sw.shifted(1) - sm;
    }
    default: {
      LaurentPoly p = (x_poly(1) - x_poly(0)).shifted(-node.lambda());
      return p * eval_c0(*node.first()) * eval_c0(*node.second());
    }
  }
}

LaurentPoly c0_Lm(int m) {
  if (m < 0) throw ValidationError("c0_Lm needs m >= 0");
  LaurentPoly sq = (x_poly(1) - x_poly(0)).pow(2);
  LaurentPoly c = x_poly(0);
  for (int k = 1; k <= m; ++k) c = x_poly(0) - sq * c;
  return c;
}

LaurentPoly c0_Km(int m) {
  if (m < 0) throw ValidationError("c0_Km needs m >= 0");
  if (m == 0) return x_poly(0);
  return (x_poly(0) + (x_poly(1) - x_poly(0)) * c0_Lm(m)).shifted(-1);
}

SkeinPtr build_km_tree(int m) {
  if (m < 1) throw ValidationError("build_km_tree needs m >= 1");
  auto U = SkeinNode::unknot();
  SkeinPtr l = U;  // L_0
  for (int k = 1; k <= m; ++k) {
    SkeinPtr lp = SkeinNode::resolve(SkeinRole::Plus, U, SkeinNode::two_component(0, U, l));
    l = SkeinNode::resolve(SkeinRole::Minus, U, SkeinNode::two_component(-1, U, lp));
  }
  return SkeinNode::resolve(SkeinRole::Plus, U, SkeinNode::two_component(0, U, l));
}

namespace {

class SkeinParser {
 public:
  explicit SkeinParser(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  SkeinPtr run() {
    SkeinPtr n = node();
    if (i_ != s_.size()) fail("trailing input");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("skein syntax error at position " + std::to_string(i_) + ": " + why);
  }
  void expect(char c) {
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  SkeinPtr node() {
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_++];
    if (c == 'U') return SkeinNode::unknot();
    if (c == 'R') {
      if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) fail("expected '+' or '-'");
      SkeinRole role = s_[i_++] == '+' ? SkeinRole::Plus : SkeinRole::Minus;
      expect('(');
      SkeinPtr a = node();
      expect(',');
      SkeinPtr b = node();
      expect(')');
      return SkeinNode::resolve(role, a, b);
    }
    if (c == 'L') {
      expect('(');
      std::size_t st = i_;
      if (i_ < s_.size() && s_[i_] == '-') ++i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::string num = s_.substr(st, i_ - st);
      if (num.empty() || num == "-" || num.size() > 9) fail("expected linking number");
      expect(',');
      SkeinPtr a = node();
      expect(',');
      SkeinPtr b = node();
      expect(')');
      return SkeinNode::two_component(std::stoi(num), a, b);
    }
    --i_;
    fail(std::string("unexpected '") + c + "'");
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace

SkeinPtr parse_skein(const std::string& text) { return SkeinParser(text).run(); }

std::string skein_str(const SkeinNode& node) {
  switch (node.kind()) {
    case SkeinKind::Unknot:
      return "U";
    case SkeinKind::Resolve:
      return std::string(node.role() == SkeinRole::Plus ? "R+(" : "R-(") + skein_str(*node.first()) + ", " +
             skein_str(*node.second()) + ")";
    default:
      return "L(" + std::to_string(node.lambda()) + ", " + skein_str(*node.first()) + ", " + skein_str(*node.second()) +
             ")";
  }
}

}  // namespace gordian
