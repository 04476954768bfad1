#include "gordian/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gordian {

int MaxPlusDeg::value() const {
  if (!v_) throw AlgebraError("value() of BOTTOM degree");
  return *v_;
}

MaxPlusDeg operator+(MaxPlusDeg a, MaxPlusDeg b) {
  if (a.is_bottom() || b.is_bottom()) return MaxPlusDeg::bottom();
  return MaxPlusDeg(*a.v_ + *b.v_);
}

MaxPlusDeg max(MaxPlusDeg a, MaxPlusDeg b) {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  return MaxPlusDeg(std::max(*a.v_, *b.v_));
}

bool operator<=(MaxPlusDeg a, MaxPlusDeg b) {
  if (a.is_bottom()) return true;
  if (b.is_bottom()) return false;
  return *a.v_ <= *b.v_;
}

std::string MaxPlusDeg::str() const { return v_ ? std::to_string(*v_) : std::string("BOTTOM"); }

LaurentPoly LaurentPoly::constant(const Integer& c, char var) { return monomial(c, 0, var); }

LaurentPoly LaurentPoly::monomial(const Integer& c, int exp, char var) {
  LaurentPoly p(var);
  if (c != 0) {
    p.lo_ = exp;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Integer>>& terms, char var) {
  LaurentPoly p(var);
  if (terms.empty()) return p;
  int lo = terms.front().first, hi = lo;
  for (const auto& [e, c] : terms) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  p.lo_ = lo;
  p.c_.assign(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (const auto& [e, c] : terms) p.c_[static_cast<std::size_t>(e - lo)] += c;
  p.trim();
  return p;
}

Integer LaurentPoly::coeff(int exp) const {
  if (c_.empty() || exp < lo_ || exp > hi()) return 0;
  return c_[static_cast<std::size_t>(exp - lo_)];
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(lo_ + static_cast<int>(i), c_[i]);
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Integer& x) { return x != 0; }));
}

MaxPlusDeg LaurentPoly::maxdeg() const { return c_.empty() ? MaxPlusDeg::bottom() : MaxPlusDeg(hi()); }
MaxPlusDeg LaurentPoly::mindeg() const { return c_.empty() ? MaxPlusDeg::bottom() : MaxPlusDeg(lo_); }

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

void LaurentPoly::require_same(const LaurentPoly& o) const {
  if (var_ != o.var_)
    throw AlgebraError(std::string("variable mismatch: ") + var_ + " vs " + o.var_);
}

void LaurentPoly::trim() {
  std::size_t b = 0;
  while (b < c_.size() && c_[b] == 0) ++b;
  if (b == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t e = c_.size();
  while (c_[e - 1] == 0) --e;
  if (b > 0 || e < c_.size()) {
    c_ = std::vector<Integer>(c_.begin() + static_cast<std::ptrdiff_t>(b), c_.begin() + static_cast<std::ptrdiff_t>(e));
    lo_ += static_cast<int>(b);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same(o);
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    lo_ = o.lo_;
    c_ = o.c_;
    return *this;
  }
  int lo = std::min(lo_, o.lo_), hi = std::max(this->hi(), o.hi());
  if (lo < lo_ || hi > this->hi()) {
    std::vector<Integer> n(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) n[static_cast<std::size_t>(lo_ - lo) + i] = std::move(c_[i]);
    c_ = std::move(n);
    lo_ = lo;
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<std::size_t>(o.lo_ - lo_) + i] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same(b);
  LaurentPoly r(a.var_);
  if (a.c_.empty() || b.c_.empty()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& k) {
  for (auto& x : c_) x *= k;
  trim();
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.c_.empty()) r.lo_ += k;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = constant(1, var_), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r(var_);
  if (c_.empty()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.lo_ = -hi();
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.var_ == b.var_ && a.lo_ == b.lo_ && a.c_ == b.c_;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Integer a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << '*';
    os << var_;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly parse_poly(const std::string& text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  for (char ch : s)
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      var = ch;
      break;
    }
  std::vector<std::pair<int, Integer>> terms;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad polynomial '" + text + "': " + why);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      fail("expected sign");
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    int e = 0;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) fail("dangling '*'");
      ++i;
    }
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      if (s[i] != var) fail("mixed variables");
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ex;
        if (i < s.size() && s[i] == '-') ex += s[i++];
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ex += s[i++];
        if (ex.empty() || ex == "-") fail("missing exponent");
        e = std::stoi(ex);
      }
    } else if (digits.empty()) {
      fail("missing term");
    }
    terms.emplace_back(e, sign * c);
  }
  return LaurentPoly::from_terms(terms, var);
}

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
MaxPlusDeg poly_maxdeg(const LaurentPoly& p) { return p.maxdeg(); }
Integer poly_eval_at_one(const LaurentPoly& p) { return p.eval_at_one(); }

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.var() != q.var()) throw AlgebraError("variable mismatch in division");
  if (q.is_zero()) throw AlgebraError("division by zero polynomial");
  if (p.is_zero()) return LaurentPoly(p.var());
  const int qh = q.hi();
  const Integer lead = q.coeff(qh);
  std::vector<std::pair<int, Integer>> quot;
  LaurentPoly rem = p;
  // Long division from the top; the remainder must vanish before its degree
  // drops below p.lo() + (q.hi() - q.lo()) would be required.
  while (!rem.is_zero()) {
    int rh = rem.hi();
    if (rh - qh < p.lo() - q.lo()) throw AlgebraError("inexact division: " + p.str() + " / " + q.str());
    Integer c = rem.coeff(rh);
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
      throw AlgebraError("inexact division: " + p.str() + " / " + q.str());
    Integer k = c / lead;
    quot.emplace_back(rh - qh, k);
    rem -= LaurentPoly::monomial(k, rh - qh, p.var()) * q;
  }
  return LaurentPoly::from_terms(quot, p.var());
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw AlgebraError("zero denominator");
  if (!num_.is_zero() && num_.var() != den_.var()) throw AlgebraError("variable mismatch in rational function");
}

RationalFn::RationalFn(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(1, num_.var())) {}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::string RationalFn::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

LaurentPoly rat_reduce_exact(const RationalFn& r) { return exact_div(r.num(), r.den()); }

MaxPlusMatrix::MaxPlusMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("max-plus matrix needs positive dimensions");
  e_.resize(static_cast<std::size_t>(rows * cols));
}

MaxPlusDeg& MaxPlusMatrix::at(int i, int j) {
  if (i < 0 || j < 0 || i >= rows_ || j >= cols_) throw std::out_of_range("max-plus index");
  return e_[static_cast<std::size_t>(i * cols_ + j)];
}

const MaxPlusDeg& MaxPlusMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= rows_ || j >= cols_) throw std::out_of_range("max-plus index");
  return e_[static_cast<std::size_t>(i * cols_ + j)];
}

MaxPlusMatrix MaxPlusMatrix::identity(int n) {
  MaxPlusMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 0;
  return m;
}

std::vector<MaxPlusDeg> maxplus_matvec(const MaxPlusMatrix& m, const std::vector<MaxPlusDeg>& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw std::invalid_argument("max-plus dimension mismatch: " + std::to_string(m.cols()) + " columns vs vector of " +
                                std::to_string(v.size()));
  std::vector<MaxPlusDeg> out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    MaxPlusDeg acc = MaxPlusDeg::bottom();
    for (int j = 0; j < m.cols(); ++j) acc = max(acc, m.at(i, j) + v[static_cast<std::size_t>(j)]);
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

}  // namespace gordian
