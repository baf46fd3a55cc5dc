#include "hampower/exact.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "hampower/errors.hpp"

namespace hampower {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw DomainError("malformed number: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("malformed number: '" + std::string(whole) + "'");
    }
  }
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  return BigInt(text, 10);
}

}  // namespace

Rational::Rational(long long value) : v_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& value) : v_(value) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  BigInt num = parse_integer(s.substr(0, slash), text);
  std::string_view den_text = trim(s.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw DomainError("malformed number: '" + std::string(text) + "'");
  }
  return Rational(num, parse_integer(den_text, text));
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::reciprocal() const {
  if (sign() == 0) throw DomainError("reciprocal of zero");
  return Rational(v_.get_den(), v_.get_num());
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

BigInt binom(const BigInt& n, unsigned long k) {
  if (n < 0) throw DomainError("binom: negative n");
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw DomainError("binom: negative argument");
  if (k > n) return 0;
  return binom(BigInt(static_cast<long>(n)), static_cast<unsigned long>(k));
}

std::pair<BigInt, BigInt> split_square(const BigInt& d) {
  if (d < 0) throw DomainError("negative radicand");
  if (d == 0) return {0, 0};
  BigInt rest = d;
  BigInt root = 1;
  BigInt core = 1;
  constexpr unsigned long kTrialLimit = 10'000'000;
  for (unsigned long p = 2; BigInt(p) * p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (p > kTrialLimit) throw ResourceError("radicand too large to normalize");
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) core *= p;
  }
  // all primes below the cube root are gone, so rest is 1, q, q*r or q^2
  if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
    root *= sqrt(rest);
  } else {
    core *= rest;
  }
  return {root, core};
}

Surd::Surd(const Rational& a) : a_(a) {}

Surd::Surd(const Rational& a, const Rational& b, const BigInt& d) : a_(a), b_(b), d_(d) {
  if (d < 0) throw DomainError("negative radicand");
  if (b_.sign() == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  auto [root, core] = split_square(d_);
  b_ *= Rational(root);
  if (core == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  } else {
    d_ = core;
  }
}

Surd Surd::sqrt(const Rational& q) {
  if (q.sign() < 0) throw DomainError("square root of a negative number");
  // sqrt(p/q) = sqrt(p*q)/q
  return Surd(0, Rational(1, q.denominator()), q.numerator() * q.denominator());
}

int Surd::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

Surd Surd::operator-() const { return Surd(-a_, -b_, d_); }

Surd Surd::reciprocal() const {
  if (is_rational()) return Surd(a_.reciprocal());
  Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
  if (norm.sign() == 0) throw DomainError("reciprocal of zero");
  return Surd(a_ / norm, -b_ / norm, d_);
}

namespace {

BigInt common_radicand(const Surd& u, const Surd& v) {
  if (u.is_rational()) return v.radicand();
  if (v.is_rational() || u.radicand() == v.radicand()) return u.radicand();
  throw DomainError("surd arithmetic across distinct radicands");
}

}  // namespace

Surd operator+(const Surd& u, const Surd& v) {
  BigInt d = common_radicand(u, v);
  return Surd(u.a_ + v.a_, u.b_ + v.b_, d);
}

Surd operator-(const Surd& u, const Surd& v) { return u + (-v); }

Surd operator*(const Surd& u, const Surd& v) {
  BigInt d = common_radicand(u, v);
  Rational dd(d);
  return Surd(u.a_ * v.a_ + u.b_ * v.b_ * dd, u.a_ * v.b_ + u.b_ * v.a_, d);
}

std::string Surd::str() const {
  if (is_rational()) return a_.str();
  std::string out;
  if (a_.sign() != 0) out = a_.str();
  if (b_.sign() < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  Rational mag = b_.abs();
  if (mag != 1) out += mag.str() + "*";
  out += "sqrt(" + d_.get_str() + ")";
  return out;
}

double Surd::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

Surd Surd::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto at = s.find("sqrt(");
  if (at == std::string_view::npos) return Surd(Rational::parse(s));
  if (s.back() != ')') throw DomainError("malformed surd: '" + std::string(text) + "'");
  BigInt d = parse_integer(s.substr(at + 5, s.size() - at - 6), text);
  std::string_view head = trim(s.substr(0, at));
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  // head is "", "-", "b", "a+b", "a-b", "a+", "a-"
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  Rational a = 0;
  std::string_view coeff = head;
  if (split != std::string_view::npos) {
    a = Rational::parse(head.substr(0, split));
    coeff = head.substr(split);
  }
  Rational b;
  if (coeff.empty() || coeff == "+") {
    b = 1;
  } else if (coeff == "-") {
    b = -1;
  } else {
    b = Rational::parse(coeff);
  }
  return Surd(a, b, d);
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

std::strong_ordering surd_cmp(const Surd& u, const Surd& v) {
  if (!u.is_rational() && !v.is_rational() && u.radicand() != v.radicand()) {
    throw UnsupportedComparison("cannot compare surds with radicands " + u.radicand().get_str() +
                                " and " + v.radicand().get_str());
  }
  int s = (u - v).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace hampower
