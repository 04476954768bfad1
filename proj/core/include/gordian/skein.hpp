#pragma once

#include <memory>
#include <string>

#include "gordian/laurent.hpp"

namespace gordian {

enum class SkeinKind { Unknot, Resolve, TwoComponent };
enum class SkeinRole { Plus, Minus };

class SkeinNode;
using SkeinPtr = std::shared_ptr<const SkeinNode>;

// c_0 evaluation tree. A Resolve node holds the switched knot and the
// smoothed two-component link of a skein triple; a TwoComponent node holds a
// linking number and two knot components.
class SkeinNode {
 public:
  static SkeinPtr unknot();
  static SkeinPtr resolve(SkeinRole role, SkeinPtr switched, SkeinPtr smoothed);
  static SkeinPtr two_component(int lambda, SkeinPtr comp1, SkeinPtr comp2);

  SkeinKind kind() const { return kind_; }
  SkeinRole role() const { return role_; }
  int lambda() const { return lambda_; }
  const SkeinPtr& first() const { return a_; }
  const SkeinPtr& second() const { return b_; }
  bool is_knot() const { return kind_ != SkeinKind::TwoComponent; }
  int depth() const;

 private:
  SkeinNode() = default;
  SkeinKind kind_ = SkeinKind::Unknot;
  SkeinRole role_ = SkeinRole::Plus;
  int lambda_ = 0;
  SkeinPtr a_, b_;
};

LaurentPoly eval_c0(const SkeinNode& node);
LaurentPoly c0_Lm(int m);
LaurentPoly c0_Km(int m);
SkeinPtr build_km_tree(int m);

// Text form: U | R+(switched, smoothed) | R-(switched, smoothed) | L(lambda, comp1, comp2)
SkeinPtr parse_skein(const std::string& text);
std::string skein_str(const SkeinNode& node);

}  // namespace gordian
