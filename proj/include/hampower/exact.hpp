#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hampower {

using BigInt = mpz_class;

// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  static Rational parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const;
  Rational reciprocal() const;

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;
  // Lossy; for display and tolerance reporting only.
  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

BigInt binom(const BigInt& n, unsigned long k);
BigInt binom(std::int64_t n, std::int64_t k);

// Largest square divisor is pulled out: returns (s, d') with d = s^2 * d'.
std::pair<BigInt, BigInt> split_square(const BigInt& d);

// a + b*sqrt(d), normalized so d is square-free and d > 1, or b = 0 and d = 0.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& a);  // NOLINT(google-explicit-constructor)
  Surd(const Rational& a, const Rational& b, const BigInt& d);

  // sqrt(q) for q >= 0.
  static Surd sqrt(const Rational& q);
  static Surd parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const BigInt& radicand() const { return d_; }
  bool is_rational() const { return b_.sign() == 0; }
  int sign() const;

  Surd operator-() const;
  Surd reciprocal() const;

  friend Surd operator+(const Surd& u, const Surd& v);
  friend Surd operator-(const Surd& u, const Surd& v);
  friend Surd operator*(const Surd& u, const Surd& v);
  friend Surd operator/(const Surd& u, const Surd& v) { return u * v.reciprocal(); }

  // Structural equality; exact because of normalization.
  friend bool operator==(const Surd& u, const Surd& v) {
    return u.a_ == v.a_ && u.b_ == v.b_ && u.d_ == v.d_;
  }

  // "a+b*sqrt(d)"; rational surds print as a plain rational.
  std::string str() const;
  double to_double() const;

 private:
  Rational a_;
  Rational b_;
  BigInt d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Surd& s);

// Exact ordering. Throws UnsupportedComparison for distinct nonzero radicands.
std::strong_ordering surd_cmp(const Surd& u, const Surd& v);

inline bool surd_less(const Surd& u, const Surd& v) { return surd_cmp(u, v) < 0; }

}  // namespace hampower
