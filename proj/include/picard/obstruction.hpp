#pragma once

// The trace obstruction to embedded totally geodesic surfaces: if a group
// element g does not stabilize the circle of a Hermitian form F but
// |tr(g* F g F^{-1})| < 2, the circle meets its g-translate and the surface
// carried by that circle cannot be embedded.  This module evaluates the
// criterion exactly, searches subgroup words for such elements, enumerates
// the canonical circles small enough to carry a closed surface, and checks
// the recorded witness for every (manifold, form) pair.

#include "picard/dataset.hpp"
#include "picard/hermitian.hpp"
#include "picard/moebius.hpp"
#include "picard/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace picard {

// tr(g* F g F^{-1}) computed exactly over Q(i); the product of two Hermitian
// matrices has real trace, and the computation asserts this.  Throws
// std::domain_error when F is degenerate (det = 0).
Rational jr_trace(const MoebiusElement& g, const HermitianForm& f);

// True iff g does not leave the circle of f invariant and -2 < jr_trace < 2
// as exact rationals.  Such a g forces the circle to cross its g-translate.
bool violates_embedding(const MoebiusElement& g, const HermitianForm& f);

// The word alphabet used by witness_search: g1..g5 followed by their
// conjugates l g1 l^-1 .. l g5 l^-1 (the conjugating element l normalizes
// each manifold group).  Index k in a GroupWord refers to alphabet()[k].
std::vector<MoebiusElement> search_alphabet(const ManifoldGroupData& data);
std::vector<std::string> search_alphabet_names(const ManifoldGroupData& data);

// A word certifying the obstruction against one transported form.
struct ObstructionWitness {
  GroupWord word;  // over search_alphabet(data)
  MoebiusElement element;
  int form_index = 0;     // 0..5 into transported_base_forms()
  Rational trace_value;   // exact value of jr_trace(element, form)
};

// Breadth-first search over freely reduced words of length <= max_len in the
// search alphabet, ordered by length then lexicographically, deduplicated by
// normalized matrix.  Returns the first word whose element satisfies
// violates_embedding against transported_base_forms()[form_index], if any.
std::optional<ObstructionWitness> witness_search(const ManifoldGroupData& data, int form_index,
                                                 int max_len);

// Canonical circles with radius at most |translation|/2: the only circles a
// closed surface subgroup can carry when the group contains the translation
// z -> z + t, since larger circles would cross their own t-translates.
struct CandidateCircleSet {
  GaussianInteger translation;
  std::vector<CanonicalCircleId> candidates;  // increasing (d, variant)
};

// With strict = true the bound is radius < |translation|/2; the equality case
// (tangency of the circle with its translate) is excluded.  Throws
// std::invalid_argument for translation = 0.
CandidateCircleSet closed_candidates(const GaussianInteger& translation, bool strict = false);

// The one candidate of the level (2+2i) family known to carry a closed
// surface (genus 3): discriminant 6, variant 3.  All other candidates are
// ruled out on discriminant grounds, so the obstruction machinery only needs
// to treat the transported copies of this circle.
CanonicalCircleId closed_surface_candidate();

// One row of a witness table: the recorded element vs. the search result.
struct TableRow {
  int form_index = 0;
  std::string listed_word;   // token string stored in the dataset
  Rational listed_trace;     // exact jr trace of the listed element
  bool listed_invariant = false;
  bool listed_ok = false;    // |trace| = 2/3 exactly and non-invariant
  GroupWord search_word;     // first witness found independently
  bool search_found = false;
  bool pass = false;         // listed_ok && search_found
};

struct TableReport {
  std::string manifold;
  std::vector<TableRow> rows;  // one per form index 0..5

  bool all_pass() const;
};

// Re-derives every table row: evaluates the recorded witness for each of the
// six transported forms and independently re-searches with max_len = 6.
// Throws std::runtime_error if a dataset lacks a recorded witness.
std::vector<TableReport> verify_witness_tables(const std::vector<ManifoldGroupData>& datasets);

}  // namespace picard
