#pragma once

// The integral Lorentz group O+(3,1;Z) acting on the quadratic form
// x1^2 + x2^2 + x3^2 - x4^2 (upper-sheet-preserving: entry (4,4) >= 1),
// its four reflection generators, the six reflections generating the
// level-two congruence subgroup, and the transport of even reflection
// words to PSL(2, Z[i]).

#include "picard/gaussian.hpp"
#include "picard/moebius.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace picard {

struct LorentzMatrix {
  std::array<BigInt, 16> e;  // row-major 4x4

  LorentzMatrix() : e{} {}
  explicit LorentzMatrix(std::array<BigInt, 16> entries) : e(std::move(entries)) {}

  static LorentzMatrix identity();

  const BigInt& entry(int row, int col) const { return e[row * 4 + col]; }
  BigInt& entry(int row, int col) { return e[row * 4 + col]; }

  LorentzMatrix transpose() const;

  friend LorentzMatrix operator*(const LorentzMatrix& x, const LorentzMatrix& y);
  friend bool operator==(const LorentzMatrix& x, const LorentzMatrix& y) { return x.e == y.e; }
  friend bool operator!=(const LorentzMatrix& x, const LorentzMatrix& y) { return !(x == y); }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const LorentzMatrix& m);

// M^T J M == J for J = diag(1,1,1,-1), and entry (4,4) >= 1.
bool is_lorentz_plus(const LorentzMatrix& m);

// The reflections a, b, c, d generating O+(3,1;Z) (indices 0..3).
const std::array<LorentzMatrix, 4>& coxeter_generators();

// The reflections r_1..r_6 generating the level-two congruence subgroup,
// as words in a, b, c, d: abcba, bcb, c, abdcdba, bdcdb, dcd.
const std::array<LorentzMatrix, 6>& level_two_reflections();

// A word in the reflections r_1..r_6.  Stored reduced with respect to
// r_i r_i = 1 (adjacent equal letters cancel).
class ReflectionWord {
 public:
  ReflectionWord() = default;
  explicit ReflectionWord(std::vector<int> letters);  // letters in 1..6; reduces

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const ReflectionWord& x, const ReflectionWord& y) {
    return x.letters_ == y.letters_;
  }

  std::string str() const;  // "r3 r6 r2 r1"

 private:
  std::vector<int> letters_;
};

// Product of the r_i over the word's letters.
LorentzMatrix evaluate_reflection_word(const ReflectionWord& w);

// M == I entrywise mod 2.  Requires is_lorentz_plus(m); throws otherwise.
bool in_level_two(const LorentzMatrix& m);

// The printed images of r_1 r_j under the identification of the even
// level-two subgroup with Gamma(1+i); index j in 1..6, j = 1 the identity.
MoebiusElement r1rj_image(int j);

// Transport an even-length reflection word to PSL(2, Z[i]) by splitting it
// into syllables r_i r_j = (r_1 r_i)^{-1} (r_1 r_j).  Throws
// std::invalid_argument for words of odd reduced length.
MoebiusElement transport_to_psl(const ReflectionWord& w);

// The same transport computed one level down: an even word over the Coxeter
// letters a..d (0..3), split into syllables xy = (ax)^{-1}(ay) using the
// printed images of ab, ac, ad.  Used to cross-check r1rj_image.
MoebiusElement even_coxeter_transport(const std::vector<int>& letters);

// Images of ab, ac, ad in PGL(2, Z[i]) (index 1..3 for b, c, d).
MoebiusElement coxeter_pair_image(int j);

// The expansion of r_1 r_j into Coxeter letters a..d (0..3).
std::vector<int> r1rj_coxeter_word(int j);

}  // namespace picard
