#include "picard/obstruction.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace picard {

Rational jr_trace(const MoebiusElement& g, const HermitianForm& f) {
  // det F = ac - |b|^2; F^{-1} = adj(F) / det(F) with adj(F) = [[c, -b], [-conj(b), a]].
  const BigInt det = f.a * f.c - f.b.norm();
  if (det == 0) throw std::domain_error("jr_trace: degenerate form");

  // tr(g* F g adj(F)) for G = g* F g = [[a', b'], [conj(b'), c']]:
  // (1,1) entry a'c - b' conj(b), (2,2) entry c'a - conj(b') b.
  const HermitianForm gf = act(g, f);
  const GaussianInteger trace = GaussianInteger(gf.a * f.c + gf.c * f.a, 0) -
                                gf.b * f.b.conj() - gf.b.conj() * f.b;
  if (trace.im != 0)
    throw std::logic_error("jr_trace: product of Hermitian matrices has non-real trace");
  // the (num, den) rational constructor requires den > 0
  return det > 0 ? Rational(trace.re, det) : Rational(-trace.re, -det);
}

bool violates_embedding(const MoebiusElement& g, const HermitianForm& f) {
  if (is_invariant(g, f)) return false;
  const Rational t = jr_trace(g, f);
  return Rational(-2) < t && t < Rational(2);
}

std::vector<MoebiusElement> search_alphabet(const ManifoldGroupData& data) {
  std::vector<MoebiusElement> alphabet = data.generators;
  const MoebiusElement l = picard_l();
  const MoebiusElement linv = l.inverse();
  for (const MoebiusElement& g : data.generators) alphabet.push_back(l * g * linv);
  return alphabet;
}

std::vector<std::string> search_alphabet_names(const ManifoldGroupData& data) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= data.generators.size(); ++k)
    names.push_back("g" + std::to_string(k));
  for (std::size_t k = 1; k <= data.generators.size(); ++k)
    names.push_back("l g" + std::to_string(k) + " l^-1");
  return names;
}

std::optional<ObstructionWitness> witness_search(const ManifoldGroupData& data, int form_index,
                                                 int max_len) {
  if (form_index < 0 || form_index > 5)
    throw std::invalid_argument("witness_search: form index out of range 0..5");
  const HermitianForm form = transported_base_forms()[static_cast<std::size_t>(form_index)];
  const std::vector<MoebiusElement> alphabet = search_alphabet(data);
  const int n = static_cast<int>(alphabet.size());

  std::vector<MoebiusElement> inverses;
  inverses.reserve(alphabet.size());
  for (const MoebiusElement& g : alphabet) inverses.push_back(g.inverse());

  std::set<MoebiusElement> seen;
  seen.insert(MoebiusElement::identity());
  std::vector<std::pair<GroupWord, MoebiusElement>> level = {
      {GroupWord(), MoebiusElement::identity()}};

  for (int len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<std::pair<GroupWord, MoebiusElement>> next;
    for (const auto& [word, elem] : level) {
      for (int gen = 0; gen < n; ++gen) {
        for (int exp : {+1, -1}) {
          if (!word.empty()) {
            const Letter& last = word.letters().back();
            if (last.gen == gen && last.exp == -exp) continue;  // not freely reduced
          }
          MoebiusElement product = elem * (exp > 0 ? alphabet[gen] : inverses[gen]);
          if (!seen.insert(product).second) continue;
          GroupWord extended = word;
          extended.append(gen, exp);
          if (violates_embedding(product, form)) {
            Rational trace = jr_trace(product, form);
            return ObstructionWitness{std::move(extended), std::move(product), form_index,
                                      std::move(trace)};
          }
          next.emplace_back(std::move(extended), std::move(product));
        }
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

CandidateCircleSet closed_candidates(const GaussianInteger& translation, bool strict) {
  if (translation.is_zero())
    throw std::invalid_argument("closed_candidates: zero translation");
  const BigInt n = translation.norm();  // radius bound squared is n/4

  // radius^2 of variant 0 is d, of variants 1..3 is d/4; the bound
  // radius^2 <= n/4 becomes 4d <= n resp. d <= n.
  const auto within = [&](const BigInt& radius_sq_times_4) {
    return strict ? radius_sq_times_4 < n : radius_sq_times_4 <= n;
  };

  CandidateCircleSet out{translation, {}};
  for (BigInt d = 1; d <= n; ++d) {
    if (within(4 * d)) out.candidates.push_back({d, 0});
    if (d % 4 == 1 && within(d)) {
      out.candidates.push_back({d, 1});
      out.candidates.push_back({d, 2});
    }
    if (d % 4 == 2 && within(d)) out.candidates.push_back({d, 3});
  }
  return out;
}

CanonicalCircleId closed_surface_candidate() { return {BigInt(6), 3}; }

bool TableReport::all_pass() const {
  if (rows.size() != 6) return false;
  for (const TableRow& r : rows)
    if (!r.pass) return false;
  return true;
}

std::vector<TableReport> verify_witness_tables(const std::vector<ManifoldGroupData>& datasets) {
  const std::array<HermitianForm, 6> forms = transported_base_forms();
  const Rational two_thirds(2, 3);

  std::vector<TableReport> reports;
  reports.reserve(datasets.size());
  for (const ManifoldGroupData& data : datasets) {
    if (data.witnesses.size() != forms.size())
      throw std::runtime_error("verify_witness_tables: dataset " + data.name +
                               " does not record a witness for every form");
    TableReport report{data.name, {}};
    for (int i = 0; i < static_cast<int>(forms.size()); ++i) {
      TableRow row;
      row.form_index = i;
      row.listed_word = data.witnesses[static_cast<std::size_t>(i)];
      const MoebiusElement elem = data.element_for(row.listed_word);
      const HermitianForm& form = forms[static_cast<std::size_t>(i)];
      row.listed_trace = jr_trace(elem, form);
      row.listed_invariant = is_invariant(elem, form);
      row.listed_ok = !row.listed_invariant && boost::multiprecision::abs(row.listed_trace) ==
                                                   two_thirds;
      if (auto found = witness_search(data, i, 6)) {
        row.search_found = true;
        row.search_word = found->word;
      }
      row.pass = row.listed_ok && row.search_found;
      report.rows.push_back(std::move(row));
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace picard
