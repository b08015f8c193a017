#pragma once

// Shared helpers for the test suites: deterministic RNG wrappers, random
// element generators, and independent oracles (Simpson quadrature, Bareiss
// determinants, a reference FNV-1a) used to cross-check library results.
// Every randomized suite constructs an Rng with a fixed, recorded seed so
// that failures replay exactly.

#include "picard/dataset.hpp"
#include "picard/fpgroups.hpp"
#include "picard/gaussian.hpp"
#include "picard/hermitian.hpp"
#include "picard/lorentz.hpp"
#include "picard/moebius.hpp"
#include "picard/obstruction.hpp"
#include "picard/report.hpp"
#include "picard/volume.hpp"
#include "picard/word.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace picard::testing {

inline GaussianInteger gi(long re, long im) { return GaussianInteger(BigInt(re), BigInt(im)); }

inline MoebiusElement mat2(long are, long aim, long bre, long bim, long cre, long cim, long dre,
                           long dim) {
  return MoebiusElement(gi(are, aim), gi(bre, bim), gi(cre, cim), gi(dre, dim));
}

inline HermitianForm form(long a, long bre, long bim, long c) {
  return HermitianForm(BigInt(a), gi(bre, bim), BigInt(c));
}

inline Rational rat(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

inline GroupWord word_of(std::initializer_list<int> gens) {
  GroupWord w;
  for (int g : gens) w.append(g, 1);
  return w;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) {  // inclusive on both ends
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  GaussianInteger gaussian(long bound) {
    return gi(integer(-bound, bound), integer(-bound, bound));
  }
  GaussianInteger nonzero_gaussian(long bound) {
    for (;;) {
      GaussianInteger z = gaussian(bound);
      if (!z.is_zero()) return z;
    }
  }

  BigInt wide_int(int bits) {
    BigInt v = 0;
    for (int b = 0; b < bits; b += 32) v = (v << 32) | BigInt(integer(0, 0xffffffffL));
    return coin() ? v : -v;
  }
  // Gaussian integer with ~bits random bits per component, to exercise the
  // arbitrary-precision paths rather than just machine-word values.
  GaussianInteger wide_gaussian(int bits) { return GaussianInteger(wide_int(bits), wide_int(bits)); }

  GroupWord word(int ngens, int len) {
    GroupWord w;
    for (int k = 0; k < len; ++k)
      w.append(static_cast<int>(integer(0, ngens - 1)), coin() ? 1 : -1);
    return w;
  }

 private:
  std::mt19937_64 eng_;
};

inline const std::vector<MoebiusElement>& whole_group_generators() {
  static const std::vector<MoebiusElement> gens = {picard_alpha(), picard_l(), picard_t(),
                                                   picard_u()};
  return gens;
}

// Random element of PSL(2, Z[i]), as a word of length <= maxlen in the
// standard generators.
inline MoebiusElement random_psl(Rng& rng, int maxlen = 8) {
  return evaluate_word(whole_group_generators(),
                       rng.word(4, static_cast<int>(rng.integer(0, maxlen))));
}

// Random nondegenerate integral Hermitian form of positive discriminant:
// a distinguished circle pushed around by a random group element, then
// rescaled by a random nonzero integer.  May describe a line (a == 0).
inline HermitianForm random_form(Rng& rng, int max_word = 6) {
  BigInt d(rng.integer(1, 40));
  std::vector<int> variants = {0};
  if (d % 4 == 1) {
    variants.push_back(1);
    variants.push_back(2);
  }
  if (d % 4 == 2) variants.push_back(3);
  int variant = variants[static_cast<std::size_t>(rng.integer(0, static_cast<long>(variants.size()) - 1))];
  HermitianForm f = canonical_form(CanonicalCircleId{d, variant});
  f = act(random_psl(rng, max_word), f);
  BigInt s(rng.integer(1, 3) * (rng.coin() ? 1 : -1));
  return HermitianForm(f.a * s, GaussianInteger(f.b.re * s, f.b.im * s), f.c * s);
}

// As above but guaranteed to be a circle (a != 0).
inline HermitianForm random_circle_form(Rng& rng, int max_word = 6) {
  for (;;) {
    HermitianForm f = random_form(rng, max_word);
    if (f.a != 0) return f;
  }
}

// Composite Simpson quadrature with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int k = 1; k < n; ++k) s += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Fraction-free determinant (Bareiss), independent of the Smith normal form
// code path it is used to check.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                 m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
             m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                 m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
            prev;
    prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  return sign * m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

// Reference FNV-1a 64, written from the published constants.
inline std::uint64_t fnv1a64_reference(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace picard::testing
