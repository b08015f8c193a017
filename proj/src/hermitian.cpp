#include "picard/hermitian.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace picard {

std::string HermitianForm::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const HermitianForm& f) {
  return os << "(" << f.a << ", " << f.b << ", " << f.c << ")";
}

BigInt discriminant(const HermitianForm& f) { return f.b.norm() - f.a * f.c; }

Rational evaluate_form(const HermitianForm& f, const GaussianRational& z) {
  GaussianRational a_q{GaussianInteger(f.a, 0)};
  GaussianRational b_q{f.b};
  GaussianRational c_q{GaussianInteger(f.c, 0)};
  GaussianRational v = a_q * GaussianRational(z.num * z.num.conj(), z.den * z.den) +
                       b_q.conj() * z + b_q * z.conj() + c_q;
  return v.as_rational();
}

HermitianForm act(const MoebiusElement& g, const HermitianForm& f) {
  // g^* F g, computed entrywise over Z[i]; the result is Hermitian with
  // integer diagonal because F is and det(g) is a unit.
  const GaussianInteger p = g.entry(0, 0), q = g.entry(0, 1), r = g.entry(1, 0), s = g.entry(1, 1);
  const GaussianInteger a(f.a, 0), c(f.c, 0);
  const GaussianInteger b = f.b, bc = f.b.conj();
  // F*g columns
  GaussianInteger f00 = a * p + b * r, f01 = a * q + b * s;
  GaussianInteger f10 = bc * p + c * r, f11 = bc * q + c * s;
  // conj-transpose(g) * (F*g)
  GaussianInteger r00 = p.conj() * f00 + r.conj() * f10;
  GaussianInteger r01 = p.conj() * f01 + r.conj() * f11;
  GaussianInteger r11 = q.conj() * f01 + s.conj() * f11;
  if (r00.im != 0 || r11.im != 0)
    throw std::logic_error("act: pullback lost Hermitian symmetry");
  return HermitianForm(r00.re, r01, r11.re);
}

HermitianForm primitive(const HermitianForm& f) {
  if (f.is_zero()) throw std::invalid_argument("primitive: zero form");
  BigInt g = boost::multiprecision::gcd(abs_int(f.a), abs_int(f.c));
  g = boost::multiprecision::gcd(g, boost::multiprecision::gcd(abs_int(f.b.re), abs_int(f.b.im)));
  HermitianForm r(f.a / g, GaussianInteger(f.b.re / g, f.b.im / g), f.c / g);
  bool flip = false;
  if (r.a != 0) {
    flip = r.a < 0;
  } else if (!r.b.is_zero()) {
    flip = r.b.re < 0 || (r.b.re == 0 && r.b.im < 0);
  } else {
    flip = r.c < 0;
  }
  if (flip) r = HermitianForm(-r.a, -r.b, -r.c);
  return r;
}

bool is_invariant(const MoebiusElement& g, const HermitianForm& f) {
  return primitive(act(g, f)) == primitive(f);
}

CircleGeometry circle_geometry(const HermitianForm& f) {
  if (f.a == 0) throw std::domain_error("circle_geometry: form describes a line, not a circle");
  BigInt disc = discriminant(f);
  if (disc <= 0)
    throw std::domain_error("circle_geometry: empty or point locus (discriminant <= 0)");
  GaussianRational center(-f.b, f.a);
  Rational radius_sq(disc, f.a * f.a);
  return {center, radius_sq};
}

IntersectCount intersect_count(const HermitianForm& f, const HermitianForm& g) {
  if (f.a == 0 || g.a == 0)
    throw std::domain_error("intersect_count: line input; both forms must be circles");
  if (discriminant(f) <= 0 || discriminant(g) <= 0)
    throw std::domain_error("intersect_count: circle with nonpositive discriminant");
  if (primitive(f) == primitive(g)) return IntersectCount::same;
  CircleGeometry cf = circle_geometry(f), cg = circle_geometry(g);
  Rational dist_sq = (cf.center - cg.center).norm();
  // compare dist^2 against (r1 +/- r2)^2 without taking square roots:
  // with s = dist^2 - r1^2 - r2^2, the circles meet twice iff s^2 < 4 r1^2 r2^2,
  // touch iff equal, and are disjoint iff s^2 > 4 r1^2 r2^2.
  Rational s = dist_sq - cf.radius_sq - cg.radius_sq;
  Rational lhs = s * s;
  Rational rhs = 4 * cf.radius_sq * cg.radius_sq;
  if (lhs < rhs) return IntersectCount::two;
  if (lhs == rhs) return IntersectCount::tangent;
  return IntersectCount::disjoint;
}

std::string CanonicalCircleId::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CanonicalCircleId& id) {
  os << "C_" << id.d;
  if (id.variant != 0) os << "," << id.variant;
  return os;
}

HermitianForm canonical_form(const CanonicalCircleId& id) {
  if (id.d < 1) throw std::invalid_argument("canonical_form: discriminant must be positive");
  switch (id.variant) {
    case 0:
      return HermitianForm(1, GaussianInteger(0, 0), -id.d);
    case 1:
      if (id.d % 4 != 1)
        throw std::invalid_argument("canonical_form: variant 1 requires d = 1 mod 4");
      return HermitianForm(2, GaussianInteger(1, 0), -(id.d - 1) / 2);
    case 2:
      if (id.d % 4 != 1)
        throw std::invalid_argument("canonical_form: variant 2 requires d = 1 mod 4");
      return HermitianForm(2, GaussianInteger(0, -1), -(id.d - 1) / 2);
    case 3:
      if (id.d % 4 != 2)
        throw std::invalid_argument("canonical_form: variant 3 requires d = 2 mod 4");
      return HermitianForm(2, GaussianInteger(1, -1), -(id.d - 2) / 2);
    default:
      throw std::invalid_argument("canonical_form: variant must be 0..3");
  }
}

std::array<HermitianForm, 6> transported_base_forms() {
  HermitianForm a0 = canonical_form(CanonicalCircleId{6, 3});
  const auto& reps = transport_reps();
  std::array<HermitianForm, 6> out;
  for (int k = 0; k < 6; ++k) out[k] = act(reps[k].inverse(), a0);
  return out;
}

}  // namespace picard
