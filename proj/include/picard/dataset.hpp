#pragma once

// Bundled group data for the five orientation double covers: matrix generators,
// the same generators as words in the six level-two reflections, auxiliary
// elements, and the recorded trace witnesses checked by the obstruction module.

#include "picard/lorentz.hpp"
#include "picard/moebius.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace picard {

// A named element that is not one of g1..g5 but is known to lie in the group,
// recorded as word * factor where the word is over g1..g5 (and l) and factor
// is an explicit matrix congruent to the identity mod (2+2i).
struct AuxiliaryElement {
  std::string word;        // token string, e.g. "g3^-1 g1^-1 g2"
  MoebiusElement factor;   // right factor; identity when the word suffices
  std::string note;        // why the product lies in the group
  MoebiusElement element;  // resolved product, computed at load
};

// Everything bundled for one manifold group: five matrix generators, the same
// five elements as reflection words (for the cross-check), named auxiliaries,
// and one witness word per transported form index 0..5.
struct ManifoldGroupData {
  std::string name;
  std::vector<MoebiusElement> generators;
  std::vector<ReflectionWord> reflection_words;
  std::map<std::string, AuxiliaryElement> auxiliaries;
  std::vector<std::string> witnesses;  // six token strings, index = form index
  std::uint64_t checksum = 0;          // FNV-1a 64 of the source file bytes

  // Resolves a witness token string ("l g1^-1 l^-1", "beta", ...) against
  // g1..g5, l, and the auxiliaries.  Throws std::invalid_argument on an
  // unknown name or malformed token.
  MoebiusElement element_for(const std::string& tokens) const;
};

// FNV-1a 64-bit hash, used to pin the byte content of data files in reports.
std::uint64_t fnv1a64(const std::string& bytes);

// Loads and validates one dataset file.  Validation failures (wrong counts,
// a generator with determinant != 1, a generator outside Gamma(1+i), an
// unresolvable witness) throw std::runtime_error naming the offender.
ManifoldGroupData load_dataset(const std::string& path);

// The bundled file names in report order.
const std::vector<std::string>& dataset_filenames();

// Loads every bundled dataset from a directory, in dataset_filenames() order.
std::vector<ManifoldGroupData> load_all_datasets(const std::string& dir);

}  // namespace picard
