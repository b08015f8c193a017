#pragma once

// Finitely presented groups: coset enumeration (Todd-Coxeter, relator-driven
// with coincidence handling), Reidemeister-Schreier subgroup presentations,
// and abelian invariants via Smith normal form over Z.

#include "picard/gaussian.hpp"
#include "picard/word.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace picard {

struct Presentation {
  std::vector<std::string> names;  // one per generator
  std::vector<GroupWord> relators;

  int generator_count() const { return static_cast<int>(names.size()); }
};

// Plain-text format: first line lists generator names, each following
// non-empty line is one relator, written as whitespace-separated tokens
// "name" or "name^k" (k any nonzero integer).  '#' starts a comment line.
Presentation parse_presentation(const std::string& text);
std::string serialize_presentation(const Presentation& p);

// The Picard group PSL(2, Z[i]) on generators a, l, t, u with relators
// a^2, l^2, (al)^2, (tl)^2, (ul)^2, (at)^3, (ual)^3, [t, u].
Presentation picard_presentation();

// A complete coset table: row per coset, column per generator and inverse;
// coset 0 is the subgroup itself and the table is standardized (cosets are
// numbered in first-appearance order scanning rows, columns g0, g0^-1, g1...).
class CosetTable {
 public:
  CosetTable(int generator_count, std::vector<std::vector<int>> rows);

  int cosets() const { return static_cast<int>(rows_.size()); }
  int generator_count() const { return ngens_; }

  // The coset reached from c by generators[gen]^exp.
  int action(int c, int gen, int exp) const;
  // Image of a coset under a whole word.
  int act_word(int c, const GroupWord& w) const;

  const std::vector<std::vector<int>>& rows() const { return rows_; }

 private:
  int ngens_;
  std::vector<std::vector<int>> rows_;  // 2*ngens columns: g0, g0^-1, g1, ...
};

enum class EnumerationStrategy {
  relator_scan,  // scan relators first, then fill remaining row entries
  row_fill,      // define all row entries first, then scan relators
};

struct EnumerationOptions {
  std::size_t cap = 1'000'000;  // max cosets ever defined
  EnumerationStrategy strategy = EnumerationStrategy::relator_scan;
  // deduction-only sweep whenever this many new cosets accumulate
  std::size_t lookahead_interval = 100'000;
};

// Enumerate the cosets of the subgroup generated by subgroup_words.  Throws
// std::runtime_error("coset enumeration did not complete within cap") when cap
// is exceeded.
CosetTable coset_enumerate(const Presentation& p, const std::vector<GroupWord>& subgroup_words,
                           const EnumerationOptions& opts = {});

// Order of the quotient of p by the normal closure of extra_relators
// (enumerates the trivial subgroup of the augmented presentation).
std::size_t quotient_order(const Presentation& p, const std::vector<GroupWord>& extra_relators,
                           const EnumerationOptions& opts = {});

// Coset table of the normal closure <<words>> as a subgroup of the group
// presented by p: the table of the trivial subgroup of p + words, reread as a
// table over p.  Feeding it to subgroup_presentation(p, .) presents the kernel
// of the quotient map.
CosetTable normal_closure_cosets(const Presentation& p, const std::vector<GroupWord>& words,
                                 const EnumerationOptions& opts = {});

// Reidemeister-Schreier: a presentation of the subgroup whose cosets the table
// enumerates, on the Schreier generators of a prefix-closed transversal.
// Freely trivial relators are dropped; no other simplification is performed.
Presentation subgroup_presentation(const Presentation& p, const CosetTable& table);

// Diagonal of the Smith normal form, nonnegative, each entry dividing the
// next; length min(rows, cols).  The input need not be square.
std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> m);

struct AbelianInvariants {
  std::vector<BigInt> torsion;  // invariant factors > 1, in divisibility order
  int rank = 0;                 // free rank

  friend bool operator==(const AbelianInvariants& x, const AbelianInvariants& y) {
    return x.torsion == y.torsion && x.rank == y.rank;
  }
  std::string str() const;
};

// Abelianization of the presented group from the relator exponent-sum matrix.
AbelianInvariants abelian_invariants(const Presentation& p);

}  // namespace picard
