#pragma once

// Elements of PGL(2, Z[i]) up to unit scalars, with the congruence machinery
// for principal congruence subgroups Gamma(beta) and the finite quotient
// PSL(2, Z[i]/(beta)).

#include "picard/gaussian.hpp"
#include "picard/word.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace picard {

// A 2x2 matrix over Z[i] with unit determinant, considered up to multiplication
// by the units {1, -1, i, -i}.  The stored representative is normalized so that
// its first nonzero entry (row-major) is a canonical associate, which makes
// equality of classes plain entrywise equality.  det_unit always equals the
// determinant of the stored entries; it is 1 or -1 exactly when the class lies
// in PSL(2, Z[i]).
class MoebiusElement {
 public:
  // Entries row-major [[e0, e1], [e2, e3]].  Throws unless det is a unit.
  explicit MoebiusElement(std::array<GaussianInteger, 4> entries);
  MoebiusElement(GaussianInteger a, GaussianInteger b, GaussianInteger c, GaussianInteger d)
      : MoebiusElement(std::array<GaussianInteger, 4>{std::move(a), std::move(b), std::move(c),
                                                      std::move(d)}) {}

  static MoebiusElement identity();

  const GaussianInteger& entry(int row, int col) const { return e_[row * 2 + col]; }
  const std::array<GaussianInteger, 4>& entries() const { return e_; }
  const GaussianInteger& det_unit() const { return det_; }

  bool in_psl() const { return det_.im == 0; }  // det is +1 or -1
  bool is_identity() const;

  MoebiusElement inverse() const;

  friend MoebiusElement operator*(const MoebiusElement& a, const MoebiusElement& b);
  friend bool operator==(const MoebiusElement& a, const MoebiusElement& b) { return a.e_ == b.e_; }
  friend bool operator!=(const MoebiusElement& a, const MoebiusElement& b) { return !(a == b); }

  // Deterministic total order (lexicographic on normalized entries); used for
  // canonical keys in closures and searches.
  friend bool operator<(const MoebiusElement& a, const MoebiusElement& b);

  std::string str() const;  // "[[a, b], [c, d]]"

 private:
  std::array<GaussianInteger, 4> e_;
  GaussianInteger det_;
};

std::ostream& operator<<(std::ostream& os, const MoebiusElement& g);

// The trace of a unit class, defined up to sign; normalized so that the stored
// value t has t.re > 0, or t.re == 0 and t.im >= 0.
struct TraceClass {
  GaussianInteger value;

  explicit TraceClass(const GaussianInteger& t);
  friend bool operator==(const TraceClass& a, const TraceClass& b) { return a.value == b.value; }
  friend bool operator!=(const TraceClass& a, const TraceClass& b) { return !(a == b); }
};

// Trace of g up to sign.  Requires g in PSL (det_unit = +/-1): otherwise the
// trace is only defined up to a factor of i and the class is meaningless.
TraceClass trace_class(const MoebiusElement& g);

// Parabolic: trace class {2, -2} and not the identity.  Requires g in PSL.
bool is_parabolic(const MoebiusElement& g);

// True iff some unit multiple of g's representative is entrywise congruent to
// the identity mod the ideal, i.e. g lies in the principal congruence subgroup
// Gamma(ideal).  Requires g in PSL; throws otherwise.
bool in_principal_congruence(const MoebiusElement& g, const GaussianIdeal& ideal);

// Product of generators[l.gen]^l.exp over the letters of w; empty word gives
// the identity.  Throws if a letter indexes past generators.size().
MoebiusElement evaluate_word(const std::vector<MoebiusElement>& generators, const GroupWord& w);

// === Fixed elements of the Picard group ===

MoebiusElement picard_alpha();  // [[0, 1], [-1, 0]]
MoebiusElement picard_l();      // [[i, 0], [0, -i]]
MoebiusElement picard_t();      // [[1, 1], [0, 1]]
MoebiusElement picard_u();      // [[1, i], [0, 1]]

// The six unimodular coset representatives T_0..T_5 used to transport the base
// Hermitian form between cusps.
const std::array<MoebiusElement, 6>& transport_reps();

// === Finite congruence quotient ===

// The image of PSL(2, Z[i]) in SL(2, Z[i]/(g))/{+-I}, built by closing the
// images of the Picard generators under multiplication.  (2+2i) is the ideal
// this is used for; the construction is generic over principal ideals.
class CongruenceQuotient {
 public:
  // Throws std::runtime_error("congruence quotient exceeds cap") if the
  // closure grows past max_order.
  explicit CongruenceQuotient(const GaussianIdeal& ideal, std::size_t max_order = 1 << 20);

  std::size_t order() const;

  // Order of the subgroup generated by the images of gens; with
  // normal_closure, the subgroup is additionally closed under conjugation by
  // the full quotient.  Every element of gens must lie in PSL.
  std::size_t subgroup_order(const std::vector<MoebiusElement>& gens,
                             bool normal_closure = false) const;

  // True iff the image of h conjugates the image subgroup of gens to itself.
  bool element_normalizes_subgroup(const MoebiusElement& h,
                                   const std::vector<MoebiusElement>& gens) const;

  struct Impl;
  ~CongruenceQuotient();
  CongruenceQuotient(CongruenceQuotient&&) noexcept;

 private:
  std::unique_ptr<Impl> impl_;
};

// order(quotient) / order(image subgroup of gens): the index in PSL(2, Z[i])
// of the group generated by gens together with Gamma(ideal).  With
// normal_closure, gens are replaced by their normal closure, giving the index
// of <<gens>> * Gamma(ideal).
std::size_t congruence_quotient_index(const std::vector<MoebiusElement>& gens,
                                      const GaussianIdeal& ideal, bool normal_closure = false,
                                      std::size_t max_order = 1 << 20);

}  // namespace picard
