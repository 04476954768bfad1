#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gordian {

using Integer = mpz_class;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degree in the max-plus semiring; std::nullopt plays the role of BOTTOM.
class MaxPlusDeg {
 public:
  MaxPlusDeg() = default;
  MaxPlusDeg(int d) : v_(d) {}  // NOLINT(google-explicit-constructor)
  static MaxPlusDeg bottom() { return {}; }

  bool is_bottom() const { return !v_; }
  int value() const;

  friend MaxPlusDeg operator+(MaxPlusDeg a, MaxPlusDeg b);
  friend MaxPlusDeg max(MaxPlusDeg a, MaxPlusDeg b);
  friend bool operator==(const MaxPlusDeg&, const MaxPlusDeg&) = default;
  // BOTTOM compares below every finite degree.
  friend bool operator<=(MaxPlusDeg a, MaxPlusDeg b);

  std::string str() const;

 private:
  std::optional<int> v_;
};

// Exact one-variable Laurent polynomial, dense storage from exponent lo().
class LaurentPoly {
 public:
  explicit LaurentPoly(char var = 'A') : var_(var) {}

  static LaurentPoly zero(char var = 'A') { return LaurentPoly(var); }
  static LaurentPoly constant(const Integer& c, char var = 'A');
  static LaurentPoly monomial(const Integer& c, int exp, char var = 'A');
  // Builds from (exponent, coefficient) pairs; repeated exponents add.
  static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms, char var = 'A');

  char var() const { return var_; }
  bool is_zero() const { return c_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  Integer coeff(int exp) const;
  // Nonzero terms in ascending exponent order.
  std::vector<std::pair<int, Integer>> terms() const;
  std::size_t term_count() const;

  MaxPlusDeg maxdeg() const;
  MaxPlusDeg mindeg() const;
  Integer eval_at_one() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& k);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& k) { return a *= k; }

  // Multiplication by var^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned e) const;
  // Substitute var -> var^-1.
  LaurentPoly mirrored() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  // Canonical text: ascending exponents, e.g. "-A^-4 - A^4 + 1 - A^12".
  std::string str() const;

 private:
  void require_same(const LaurentPoly& o) const;
  void trim();

  char var_;
  int lo_ = 0;
  std::vector<Integer> c_;
};

// Parses the canonical text form (whitespace-tolerant); the variable is
// inferred from the text or taken from `var` for constants.
LaurentPoly parse_poly(const std::string& text, char var = 'A');

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);
MaxPlusDeg poly_maxdeg(const LaurentPoly& p);
Integer poly_eval_at_one(const LaurentPoly& p);

// Exact quotient p / q in the Laurent ring; throws AlgebraError when q does
// not divide p.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

class RationalFn {
 public:
  RationalFn(LaurentPoly num, LaurentPoly den);
  explicit RationalFn(LaurentPoly num);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend bool operator==(const RationalFn& a, const RationalFn& b);

  std::string str() const;

 private:
  LaurentPoly num_, den_;
};

LaurentPoly rat_reduce_exact(const RationalFn& r);

class MaxPlusMatrix {
 public:
  MaxPlusMatrix(int rows, int cols);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  MaxPlusDeg& at(int i, int j);
  const MaxPlusDeg& at(int i, int j) const;
  static MaxPlusMatrix identity(int n);

  friend bool operator==(const MaxPlusMatrix&, const MaxPlusMatrix&) = default;

 private:
  int rows_, cols_;
  std::vector<MaxPlusDeg> e_;
};

std::vector<MaxPlusDeg> maxplus_matvec(const MaxPlusMatrix& m, const std::vector<MaxPlusDeg>& v);

}  // namespace gordian
