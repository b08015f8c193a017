#pragma once

// Exact arithmetic over the Gaussian integers Z[i] and the Gaussian
// rationals Q(i).  Everything here is arbitrary precision: entries of
// group elements and Hermitian forms grow quickly under word evaluation,
// and all downstream verdicts (congruences, traces, circle intersections)
// must be exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace picard {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt abs_int(const BigInt& a);

// Floor division (rounds toward minus infinity; cpp_int's operator/ truncates).
BigInt floor_div(const BigInt& num, const BigInt& den);

// Nearest integer to num/den, ties broken upward.  Used by Euclidean division.
BigInt round_div(const BigInt& num, const BigInt& den);

// === Gaussian integers ===

struct GaussianInteger {
  BigInt re;
  BigInt im;

  GaussianInteger() : re(0), im(0) {}
  GaussianInteger(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianInteger(long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const;  // one of 1, -1, i, -i

  GaussianInteger conj() const { return {re, -im}; }
  BigInt norm() const { return re * re + im * im; }

  friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInteger operator-(const GaussianInteger& a) { return {-a.re, -a.im}; }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianInteger& a, const GaussianInteger& b) { return !(a == b); }

  // Lexicographic (re, im); used only to fix deterministic orderings.
  friend bool operator<(const GaussianInteger& a, const GaussianInteger& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  std::string str() const;  // "3-2i" style rendering
};

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z);

// Parse strings like "2+2i", "-1+i", "i", "3".  Throws std::invalid_argument.
GaussianInteger parse_gaussian(const std::string& text);

// Nearest-lattice-point quotient of a/b (Euclidean: norm(a - q*b) <= norm(b)/2).
GaussianInteger rounded_div(const GaussianInteger& a, const GaussianInteger& b);

// True iff d divides z exactly in Z[i].
bool divides(const GaussianInteger& d, const GaussianInteger& z);

// Exact quotient z/d; throws if d is zero or does not divide z.
GaussianInteger exact_div(const GaussianInteger& z, const GaussianInteger& d);

// The canonical associate of z: the unique unit multiple with re > 0, im >= 0
// (equivalently the representative in the half-open first quadrant).
// Throws for z = 0.
GaussianInteger canonical_associate(const GaussianInteger& z);

// The unit u with u*z == canonical_associate(z).
GaussianInteger canonical_unit(const GaussianInteger& z);

// Euclidean gcd, returned as a canonical associate.  gcd(z, 0) = canonical
// associate of z; gcd(0, 0) is undefined and throws.
GaussianInteger gi_gcd(GaussianInteger a, GaussianInteger b);

// === Ideals and congruences ===

// Principal ideal (g) of Z[i]; g must be nonzero.
struct GaussianIdeal {
  GaussianInteger generator;

  explicit GaussianIdeal(GaussianInteger g);
  BigInt norm() const { return generator.norm(); }
};

// z == w modulo the ideal.
bool congruent_mod(const GaussianInteger& z, const GaussianInteger& w, const GaussianIdeal& ideal);

// === Gaussian rationals ===

// num/den with num in Z[i] and den a positive integer, kept reduced:
// gcd(den, content(num)) == 1.
struct GaussianRational {
  GaussianInteger num;
  BigInt den;

  GaussianRational() : num(), den(1) {}
  GaussianRational(GaussianInteger n, BigInt d);  // reduces; throws on d == 0
  explicit GaussianRational(const GaussianInteger& n) : num(n), den(1) {}

  bool is_zero() const { return num.is_zero(); }
  bool is_real() const { return num.im == 0; }

  GaussianRational conj() const { return {num.conj(), den}; }
  Rational norm() const;         // |.|^2 as a rational
  Rational real_part() const;    // re(num)/den
  Rational imag_part() const;

  // The rational value; throws if not real.
  Rational as_rational() const;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator-(const GaussianRational& a);
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  // Field division; throws on division by zero.
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

}  // namespace picard
