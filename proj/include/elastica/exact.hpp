#ifndef ELASTICA_EXACT_HPP
#define ELASTICA_EXACT_HPP

// Exact scalar arithmetic over the field Q(sqrt2): values a + b*sqrt(2) with
// rational a, b. All tensor identities in this library are polynomial, so
// staying inside Q(sqrt2) keeps Kelvin matrices (whose mixed blocks carry a
// sqrt(2) factor) exactly representable.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace elastica {

using BigRat = boost::multiprecision::cpp_rational;

class Exact {
 public:
  Exact() : a_(0), b_(0) {}
  Exact(int v) : a_(v), b_(0) {}                 // NOLINT: implicit by design
  Exact(long long v) : a_(v), b_(0) {}           // NOLINT
  explicit Exact(BigRat a) : a_(std::move(a)), b_(0) {}
  Exact(BigRat a, BigRat b) : a_(std::move(a)), b_(std::move(b)) {}

  static Exact rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Exact: zero denominator");
    return Exact(BigRat(num, den));
  }
  static Exact sqrt2() { return Exact(BigRat(0), BigRat(1)); }

  const BigRat& rat_part() const { return a_; }
  const BigRat& sqrt2_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  Exact operator-() const { return Exact(-a_, -b_); }

  Exact& operator+=(const Exact& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Exact& operator-=(const Exact& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Exact& operator*=(const Exact& o) {
    // (a + b s)(c + d s) = ac + 2bd + (ad + bc) s,  s^2 = 2
    BigRat na = a_ * o.a_ + 2 * b_ * o.b_;
    BigRat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  Exact& operator/=(const Exact& o) {
    // 1/(c + d s) = (c - d s)/(c^2 - 2 d^2); the norm vanishes only at 0.
    BigRat n = o.a_ * o.a_ - 2 * o.b_ * o.b_;
    if (n == 0) throw std::domain_error("Exact: division by zero");
    BigRat na = (a_ * o.a_ - 2 * b_ * o.b_) / n;
    BigRat nb = (b_ * o.a_ - a_ * o.b_) / n;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }

  friend Exact operator+(Exact l, const Exact& r) { return l += r; }
  friend Exact operator-(Exact l, const Exact& r) { return l -= r; }
  friend Exact operator*(Exact l, const Exact& r) { return l *= r; }
  friend Exact operator/(Exact l, const Exact& r) { return l /= r; }

  friend bool operator==(const Exact& l, const Exact& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator!=(const Exact& l, const Exact& r) { return !(l == r); }
  friend bool operator<(const Exact& l, const Exact& r) {
    return (l - r).sign() < 0;
  }
  friend bool operator>(const Exact& l, const Exact& r) { return r < l; }
  friend bool operator<=(const Exact& l, const Exact& r) { return !(r < l); }
  friend bool operator>=(const Exact& l, const Exact& r) { return !(l < r); }

  // Sign of a + b*sqrt(2), decided by comparing a^2 with 2 b^2.
  int sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b| sqrt2  <=>  a^2 vs 2 b^2.
    BigRat a2 = a_ * a_;
    BigRat b2 = 2 * b_ * b_;
    if (a2 == b2) return 0;  // impossible for b != 0, kept for completeness
    return (a2 > b2) ? sa : sb;
  }

  double to_double() const {
    return static_cast<double>(a_) + 1.4142135623730951 * static_cast<double>(b_);
  }

  // "p/q", "p/q*sqrt2", "p/q+r/s*sqrt2" and decimal forms like "-1.25".
  std::string str() const {
    if (b_ == 0) return rat_str(a_);
    std::string s = (b_ == 1) ? "sqrt2" : (b_ == -1 ? "-sqrt2" : rat_str(b_) + "*sqrt2");
    if (a_ == 0) return s;
    if (b_ > 0) return rat_str(a_) + "+" + s;
    return rat_str(a_) + s;  // the '-' is carried by the sqrt2 term
  }

  static Exact parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const Exact& x) {
    return os << x.str();
  }

 private:
  static std::string rat_str(const BigRat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
  }

  BigRat a_, b_;
};

namespace detail {

// Rational literal: integer, fraction "p/q", or finite decimal "x.yyy".
inline BigRat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty numeric literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigRat num(boost::multiprecision::cpp_int(s.substr(0, slash)));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in literal");
    return num / BigRat(den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    return BigRat(boost::multiprecision::cpp_int(s));
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  if (digits == "" || digits == "-" || digits == "+")
    throw std::invalid_argument("bad decimal literal: " + s);
  boost::multiprecision::cpp_int num(digits);
  boost::multiprecision::cpp_int den(1);
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  return BigRat(num) / BigRat(den);
}

}  // namespace detail

inline Exact Exact::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty exact literal");

  // Split into at most two signed terms.
  BigRat a(0), b(0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t start = pos;
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
    std::string term = s.substr(start, pos - start);
    bool is_sqrt = false;
    std::string num = term;
    auto star = term.find("*sqrt2");
    if (star != std::string::npos && star + 6 == term.size()) {
      is_sqrt = true;
      num = term.substr(0, star);
    } else if (term == "sqrt2" || term == "+sqrt2") {
      is_sqrt = true;
      num = "1";
    } else if (term == "-sqrt2") {
      is_sqrt = true;
      num = "-1";
    }
    BigRat v = detail::parse_rat(num[0] == '+' ? num.substr(1) : num);
    if (is_sqrt)
      b += v;
    else
      a += v;
  }
  return {a, b};
}

}  // namespace elastica

#endif  // ELASTICA_EXACT_HPP
