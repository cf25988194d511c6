#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sl2p {

// All arithmetic in this project is exact. Overflow aborts loudly instead of
// wrapping; the verification suites are worthless if a value silently clips.
[[noreturn]] inline void overflow_fail(const char* where) {
  throw std::overflow_error(std::string("integer overflow in ") + where);
}

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) overflow_fail("add");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) overflow_fail("mul");
  return r;
}

inline long long checked_pow(long long base, int exp) {
  if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
  long long r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// Reduced fraction num/den, den >= 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  long long as_integer() const {
    if (den_ != 1) throw std::domain_error("Rational::as_integer: not an integer");
    return num_;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    long long g = std::gcd(a.den_, b.den_);
    long long bd = b.den_ / g;
    long long n = checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g));
    long long d = checked_mul(a.den_, bd);
    return Rational(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    long long g1 = std::gcd(std::abs(a.num_), b.den_);
    long long g2 = std::gcd(std::abs(b.num_), a.den_);
    Rational r;
    r.num_ = checked_mul(a.num_ / g1, b.num_ / g2);
    r.den_ = checked_mul(a.den_ / g2, b.den_ / g1);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = std::abs(b.num_);
    return a * inv;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }

  double to_double() const { return double(num_) / double(den_); }

  // q^e for possibly negative e
  static Rational power(long long q, int e) {
    return e >= 0 ? Rational(checked_pow(q, e)) : Rational(1, checked_pow(q, -e));
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(std::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_;
  long long den_;
};

// Half-integers d = twice/2; depths and ramified valuations live here.
class HalfInt {
 public:
  constexpr HalfInt() : twice_(0) {}
  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  static constexpr HalfInt whole(int n) { return from_twice(2 * n); }
  static constexpr HalfInt half(int n) { return from_twice(n); }  // n/2

  constexpr int twice() const { return twice_; }
  constexpr bool is_integral() const { return twice_ % 2 == 0; }
  constexpr int as_int() const { return twice_ / 2; }  // caller checks is_integral
  constexpr int floor() const { return twice_ >= 0 ? twice_ / 2 : (twice_ - 1) / 2; }
  constexpr int ceil() const { return -HalfInt::from_twice(-twice_).floor(); }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice_ == b.twice_; }
  friend constexpr bool operator!=(HalfInt a, HalfInt b) { return a.twice_ != b.twice_; }
  friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.twice_ < b.twice_; }
  friend constexpr bool operator<=(HalfInt a, HalfInt b) { return a.twice_ <= b.twice_; }
  friend constexpr bool operator>(HalfInt a, HalfInt b) { return a.twice_ > b.twice_; }
  friend constexpr bool operator>=(HalfInt a, HalfInt b) { return a.twice_ >= b.twice_; }

  std::string str() const {
    if (is_integral()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }
  // accepts "2", "3/2", "-1/2"
  static HalfInt parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return whole(std::stoi(s));
      if (s.substr(slash + 1) != "2") throw std::invalid_argument("");
      return from_twice(std::stoi(s.substr(0, slash)));
    } catch (...) {
      throw std::invalid_argument("HalfInt: cannot parse '" + s + "'");
    }
  }

  Rational to_rational() const { return Rational(twice_, 2); }

 private:
  int twice_;
};

// Monomial c * q^e with e a half-integer, canonicalized so e is 0 or 1/2.
// Every identity we check either collapses to a rational (integral e) or
// compares monomials with matching irrational parts, so this form is exact.
class QPow {
 public:
  QPow() : q_(0), coeff_(0), half_exp_(false) {}
  static QPow make(long long q, Rational coeff, HalfInt exp) {
    QPow v;
    v.q_ = q;
    if (coeff.is_zero()) return v;  // canonical zero: q_ = 0
    int fl = exp.floor();
    v.coeff_ = coeff * Rational::power(q, fl);
    v.half_exp_ = (exp - HalfInt::whole(fl)) == HalfInt::half(1);
    v.q_ = q;
    return v;
  }

  long long q() const { return q_; }
  Rational coeff() const { return coeff_; }
  bool has_half_exp() const { return half_exp_; }
  bool is_zero() const { return coeff_.is_zero(); }

  bool is_rational() const { return !half_exp_; }
  Rational as_rational() const {
    if (half_exp_) throw std::domain_error("QPow::as_rational: irrational value");
    return coeff_;
  }

  friend bool operator==(const QPow& a, const QPow& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.q_ == b.q_ && a.coeff_ == b.coeff_ && a.half_exp_ == b.half_exp_;
  }
  friend bool operator!=(const QPow& a, const QPow& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s = coeff_.str();
    if (half_exp_) s += "*sqrt(" + std::to_string(q_) + ")";
    return s;
  }

  double to_double() const {
    double v = coeff_.to_double();
    if (half_exp_) v *= std::sqrt(double(q_));
    return v;
  }

 private:
  long long q_;
  Rational coeff_;
  bool half_exp_;
};

}  // namespace sl2p
