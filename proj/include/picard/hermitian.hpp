#pragma once

// Integral binary Hermitian forms over Z[i] and the circles in the extended
// complex plane they cut out.  A form (a, b, c) is the Hermitian matrix
// [[a, b], [conj(b), c]] with a, c integers, and describes the circle
//
//   a |z|^2 + conj(b) z + b conj(z) + c = 0,
//
// a Euclidean circle when a != 0 and the discriminant |b|^2 - a c is positive,
// and a line when a == 0.

#include "picard/gaussian.hpp"
#include "picard/moebius.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace picard {

struct HermitianForm {
  BigInt a;
  GaussianInteger b;
  BigInt c;

  HermitianForm() : a(0), b(), c(0) {}
  HermitianForm(BigInt a_, GaussianInteger b_, BigInt c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

  bool is_zero() const { return a == 0 && b.is_zero() && c == 0; }

  friend bool operator==(const HermitianForm& f, const HermitianForm& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c;
  }
  friend bool operator!=(const HermitianForm& f, const HermitianForm& g) { return !(f == g); }

  std::string str() const;  // "(a, b, c)"
};

std::ostream& operator<<(std::ostream& os, const HermitianForm& f);

// discriminant = |b|^2 - a*c
BigInt discriminant(const HermitianForm& f);

// The value a|z|^2 + conj(b) z + b conj(z) + c, exact; always real.
Rational evaluate_form(const HermitianForm& f, const GaussianRational& z);

// The pullback g^* F g.  The circle of the result is the inverse Moebius image
// g^{-1}(C) of the circle C of f; fixed points of the circle action correspond
// to invariant forms.
HermitianForm act(const MoebiusElement& g, const HermitianForm& f);

// Divide by the integer content and normalize the sign: a > 0 if a != 0,
// otherwise b is (the canonical choice of) +/-b, otherwise c > 0.
// Throws for the zero form.
HermitianForm primitive(const HermitianForm& f);

// primitive(act(g, f)) == primitive(f)
bool is_invariant(const MoebiusElement& g, const HermitianForm& f);

// Center and squared radius of the circle of f.  Throws domain_error for a
// line (a == 0) and for discriminant <= 0 (point or empty locus).
struct CircleGeometry {
  GaussianRational center;  // -b/a
  Rational radius_sq;       // disc / a^2
};

CircleGeometry circle_geometry(const HermitianForm& f);

// Exact relative position of two circles (both a != 0, disc > 0).
enum class IntersectCount {
  same,      // identical circles (equal primitive forms)
  disjoint,  // no common point
  tangent,   // exactly one common point
  two        // exactly two common points
};

IntersectCount intersect_count(const HermitianForm& f, const HermitianForm& g);

// === Canonical circles ===

// The distinguished circles of discriminant d:
//   variant 0:  (1, 0, -d)                 radius sqrt(d), any d >= 1
//   variant 1:  (2, 1, -(d-1)/2)           radius sqrt(d)/2, d = 1 mod 4
//   variant 2:  (2, -i, -(d-1)/2)          radius sqrt(d)/2, d = 1 mod 4
//   variant 3:  (2, 1-i, -(d-2)/2)         radius sqrt(d)/2, d = 2 mod 4
struct CanonicalCircleId {
  BigInt d;
  int variant;  // 0..3

  friend bool operator==(const CanonicalCircleId& x, const CanonicalCircleId& y) {
    return x.d == y.d && x.variant == y.variant;
  }
  friend bool operator<(const CanonicalCircleId& x, const CanonicalCircleId& y) {
    if (x.d != y.d) return x.d < y.d;
    return x.variant < y.variant;
  }

  std::string str() const;  // "C_6", "C_6,3"
};

std::ostream& operator<<(std::ostream& os, const CanonicalCircleId& id);

// Throws std::invalid_argument for d < 1, variant outside 0..3, or a variant
// whose congruence condition on d fails.
HermitianForm canonical_form(const CanonicalCircleId& id);

// The six forms (T_k^{-1})^* A0 (T_k^{-1}), k = 0..5, where A0 is the
// canonical discriminant-6 variant-3 form and T_k are transport_reps().
std::array<HermitianForm, 6> transported_base_forms();

}  // namespace picard
