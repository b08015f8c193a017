#include "picard/gaussian.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace picard {

BigInt abs_int(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("floor_div: zero denominator");
  BigInt q = num / den;  // truncates toward zero
  if ((num % den) != 0 && ((num < 0) != (den < 0))) q -= 1;
  return q;
}

BigInt round_div(const BigInt& num, const BigInt& den) {
  // floor((2*num + den) / (2*den)) rounds to nearest, ties upward
  BigInt d = den < 0 ? BigInt(-den) : den;
  BigInt n = den < 0 ? BigInt(-num) : num;
  return floor_div(2 * n + d, 2 * d);
}

bool GaussianInteger::is_unit() const { return norm() == 1; }

std::string GaussianInteger::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z) {
  if (z.im == 0) return os << z.re;
  if (z.re == 0) {
    if (z.im == 1) return os << "i";
    if (z.im == -1) return os << "-i";
    return os << z.im << "i";
  }
  os << z.re;
  if (z.im == 1) return os << "+i";
  if (z.im == -1) return os << "-i";
  if (z.im > 0) os << "+";
  return os << z.im << "i";
}

GaussianInteger parse_gaussian(const std::string& text) {
  // Grammar: [sign] term [sign term] where term is digits, digits "i", or "i".
  // Whitespace is ignored.
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("parse_gaussian: empty input");

  BigInt re = 0, im = 0;
  size_t pos = 0;
  bool seen_real = false, seen_imag = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::string digits;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) digits.push_back(s[pos++]);
    bool imag = pos < s.size() && s[pos] == 'i';
    if (imag) ++pos;
    if (digits.empty() && !imag) throw std::invalid_argument("parse_gaussian: bad syntax: " + text);
    BigInt v = digits.empty() ? BigInt(1) : BigInt(digits);
    if (imag) {
      if (seen_imag) throw std::invalid_argument("parse_gaussian: repeated imaginary term: " + text);
      im = sign * v;
      seen_imag = true;
    } else {
      if (seen_real) throw std::invalid_argument("parse_gaussian: repeated real term: " + text);
      re = sign * v;
      seen_real = true;
    }
  }
  return {re, im};
}

GaussianInteger rounded_div(const GaussianInteger& a, const GaussianInteger& b) {
  if (b.is_zero()) throw std::invalid_argument("rounded_div: division by zero");
  GaussianInteger num = a * b.conj();
  BigInt n = b.norm();
  return {round_div(num.re, n), round_div(num.im, n)};
}

bool divides(const GaussianInteger& d, const GaussianInteger& z) {
  if (d.is_zero()) return z.is_zero();
  GaussianInteger num = z * d.conj();
  BigInt n = d.norm();
  return num.re % n == 0 && num.im % n == 0;
}

GaussianInteger exact_div(const GaussianInteger& z, const GaussianInteger& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  GaussianInteger num = z * d.conj();
  BigInt n = d.norm();
  if (num.re % n != 0 || num.im % n != 0)
    throw std::invalid_argument("exact_div: " + d.str() + " does not divide " + z.str());
  return {num.re / n, num.im / n};
}

GaussianInteger canonical_unit(const GaussianInteger& z) {
  if (z.is_zero()) throw std::invalid_argument("canonical_unit: zero has no canonical associate");
  const GaussianInteger units[4] = {
      GaussianInteger(1, 0), GaussianInteger(0, 1), GaussianInteger(-1, 0), GaussianInteger(0, -1)};
  for (const auto& u : units) {
    GaussianInteger w = u * z;
    if (w.re > 0 && w.im >= 0) return u;
  }
  throw std::logic_error("canonical_unit: no associate in the half-open first quadrant");
}

GaussianInteger canonical_associate(const GaussianInteger& z) { return canonical_unit(z) * z; }

GaussianInteger gi_gcd(GaussianInteger a, GaussianInteger b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gi_gcd: gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    GaussianInteger q = rounded_div(a, b);
    GaussianInteger r = a - q * b;
    a = b;
    b = r;
  }
  return canonical_associate(a);
}

GaussianIdeal::GaussianIdeal(GaussianInteger g) : generator(std::move(g)) {
  if (generator.is_zero()) throw std::invalid_argument("GaussianIdeal: zero generator");
}

bool congruent_mod(const GaussianInteger& z, const GaussianInteger& w, const GaussianIdeal& ideal) {
  return divides(ideal.generator, z - w);
}

// === GaussianRational ===

GaussianRational::GaussianRational(GaussianInteger n, BigInt d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw std::invalid_argument("GaussianRational: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  BigInt content = boost::multiprecision::gcd(abs_int(num.re), abs_int(num.im));
  BigInt g = boost::multiprecision::gcd(content, den);
  if (g > 1) {
    num.re /= g;
    num.im /= g;
    den /= g;
  }
}

Rational GaussianRational::norm() const { return Rational(num.norm(), den * den); }

Rational GaussianRational::real_part() const { return Rational(num.re, den); }

Rational GaussianRational::imag_part() const { return Rational(num.im, den); }

Rational GaussianRational::as_rational() const {
  if (!is_real()) throw std::domain_error("GaussianRational::as_rational: value is not real: " + str());
  return Rational(num.re, den);
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  GaussianInteger n = GaussianInteger(a.num.re * b.den, a.num.im * b.den) +
                      GaussianInteger(b.num.re * a.den, b.num.im * a.den);
  return {n, a.den * b.den};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) { return a + (-b); }

GaussianRational operator-(const GaussianRational& a) { return {-a.num, a.den}; }

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.num * b.num, a.den * b.den};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::invalid_argument("GaussianRational: division by zero");
  // 1/(p/q) = q*conj(p) / norm(p)
  GaussianInteger n = a.num * b.num.conj();
  return {GaussianInteger(n.re * b.den, n.im * b.den), a.den * b.num.norm()};
}

std::string GaussianRational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) {
  os << "(" << q.num << ")/" << q.den;
  return os;
}

}  // namespace picard
