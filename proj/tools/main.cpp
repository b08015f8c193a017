// picard-verify: command-line driver for the verification pipelines.
//
// Subcommands select a pipeline (or all of them), results are collected into
// a deterministic report, and the exit status encodes the outcome:
//   0 every check passed        2 bad usage / missing or invalid input
//   1 at least one check failed 3 internal computation error

#include "picard/dataset.hpp"
#include "picard/fpgroups.hpp"
#include "picard/hermitian.hpp"
#include "picard/lorentz.hpp"
#include "picard/moebius.hpp"
#include "picard/obstruction.hpp"
#include "picard/report.hpp"
#include "picard/volume.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace picard;

struct Options {
  std::string data_dir;
  std::string output;            // empty = stdout
  std::string format = "text";   // text | structured
  std::string manifold;          // empty = all
  int form = -1;                 // -1 = all
  int max_len = 6;
  double tol = kComparisonTolerance;
  int copies = 16;
  double vol3 = kVolumeArgument;
  int chi = 2;
  std::string translation = "2+2i";
  bool strict = false;
};

std::string default_data_dir() {
  if (const char* env = std::getenv("PICARD_VERIFY_DATA")) return env;
  return "data";
}

std::vector<ManifoldGroupData> load_selected(const Options& opt, VerificationReport& report) {
  std::vector<ManifoldGroupData> all = load_all_datasets(opt.data_dir);
  const auto& names = dataset_filenames();
  for (std::size_t i = 0; i < all.size(); ++i)
    report.dataset_checksums.emplace_back(names[i], all[i].checksum);
  if (opt.manifold.empty()) return all;
  for (auto& d : all)
    if (d.name == opt.manifold) return {std::move(d)};
  throw CLI::ValidationError("--manifold", "unknown manifold '" + opt.manifold + "'");
}

std::string trace_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// --- pipelines, one function per subcommand ---

void run_group_orders(VerificationReport& report) {
  Presentation p = picard_presentation();
  const GroupWord t = GroupWord::single(2), u = GroupWord::single(3);

  std::vector<GroupWord> first = {t * u, t.pow(2), u.pow(2)};
  std::size_t order6 = quotient_order(p, first);
  report.add_equal("quotient-order-6",
                   "order of the quotient by the normal closure of {tu, t^2, u^2}", "6",
                   std::to_string(order6));

  CosetTable kernel = normal_closure_cosets(p, first);
  Presentation sub = subgroup_presentation(p, kernel);
  AbelianInvariants inv = abelian_invariants(sub);
  report.add_equal("kernel-abelian-invariants",
                   "abelian invariants of the index-6 quotient's kernel", "[2, 2, 2, 2, 2] rank 0",
                   inv.str());

  std::size_t order192 = quotient_order(p, {t.pow(2) * u.pow(2), t.pow(4)});
  report.add_equal("quotient-order-192",
                   "order of the quotient by the normal closure of {t^2 u^2, t^4}", "192",
                   std::to_string(order192));
}

void run_quotient_indices(const std::vector<ManifoldGroupData>& datasets,
                          VerificationReport& report) {
  GaussianIdeal ideal(parse_gaussian("2+2i"));
  for (const auto& d : datasets) {
    std::size_t index = congruence_quotient_index(d.generators, ideal);
    report.add_equal("index-" + d.name,
                     "index in PSL(2, Z[i]) of <generators, Gamma(2+2i)> for " + d.name, "48",
                     std::to_string(index));
  }
}

void run_cross_check(const std::vector<ManifoldGroupData>& datasets, VerificationReport& report) {
  for (int j = 2; j <= 6; ++j) {
    MoebiusElement direct = r1rj_image(j);
    MoebiusElement derived = even_coxeter_transport(r1rj_coxeter_word(j));
    report.add("r1r" + std::to_string(j) + "-coxeter-consistency",
               "r1 r" + std::to_string(j) + " image agrees with its Coxeter-letter transport",
               direct.str(), derived.str(), direct == derived);
  }
  for (const auto& d : datasets) {
    for (std::size_t k = 0; k < d.generators.size(); ++k) {
      MoebiusElement transported = transport_to_psl(d.reflection_words[k]);
      report.add("transport-" + d.name + "-g" + std::to_string(k + 1),
                 "reflection word for " + d.name + " g" + std::to_string(k + 1) +
                     " transports to the stored matrix",
                 d.generators[k].str(), transported.str(), transported == d.generators[k]);
    }
  }
}

void run_tables(const std::vector<ManifoldGroupData>& datasets, VerificationReport& report,
                int max_len) {
  (void)max_len;
  std::vector<TableReport> tables = verify_witness_tables(datasets);
  for (const auto& table : tables) {
    for (const auto& row : table.rows) {
      std::ostringstream computed;
      computed << "trace " << row.listed_trace << ", "
               << (row.listed_invariant ? "invariant" : "non-invariant") << ", search "
               << (row.search_found ? "hit" : "miss");
      report.add("table-" + table.manifold + "-form" + std::to_string(row.form_index),
                 table.manifold + " witness '" + row.listed_word + "' against form A" +
                     std::to_string(row.form_index),
                 "|trace| = 2/3, non-invariant, search hit", computed.str(), row.pass);
    }
  }

  // The recorded-membership display: g2^-1 g1 g3 beta collapses to the stored
  // explicit matrix, which lies in Gamma(2+2i).
  for (const auto& d : datasets) {
    auto it = d.auxiliaries.find("beta");
    if (it == d.auxiliaries.end()) continue;
    MoebiusElement shifted = d.element_for("g2^-1 g1 g3 beta");
    bool congruent = in_principal_congruence(shifted, GaussianIdeal(parse_gaussian("2+2i")));
    report.add("beta-membership-" + d.name,
               d.name + ": g2^-1 g1 g3 beta equals the recorded matrix and lies in Gamma(2+2i)",
               it->second.factor.str() + ", congruent", shifted.str() + (congruent ? ", congruent" : ", not congruent"),
               shifted == it->second.factor && congruent);

    // Invariance profile of g1 (trace class 2i): it fixes exactly the
    // transported circles 0 and 5, and on both the criterion trace is the
    // boundary value -2, outside the strict inequality — which is why the
    // recorded tables witness those two forms with g3 instead.
    TraceClass tc = trace_class(d.generators[0]);
    bool trace_ok = tc.value == GaussianInteger(0, 2);
    std::string profile;
    bool boundary = true;
    const auto forms = transported_base_forms();
    for (int i = 0; i < 6; ++i) {
      if (!is_invariant(d.generators[0], forms[i])) continue;
      if (!profile.empty()) profile += " ";
      profile += std::to_string(i);
      if (jr_trace(d.generators[0], forms[i]) != Rational(-2)) boundary = false;
    }
    report.add("g1-invariance-profile-" + d.name,
               d.name + ": g1 has trace class 2i and fixes exactly the transported circles "
                        "0 and 5, both at boundary criterion trace -2",
               "trace 2i, fixes {0 5}, traces -2",
               "trace " + tc.value.str() + ", fixes {" + profile + "}, " +
                   (boundary ? "traces -2" : "non-boundary trace"),
               trace_ok && profile == "0 5" && boundary);
  }
}

void run_volume_bound(const Options& opt, VerificationReport& report) {
  ContradictionReport r = contradiction_check(opt.copies, opt.vol3, opt.chi, opt.tol);
  std::ostringstream lhs, rhs;
  lhs.precision(6);
  rhs.precision(6);
  lhs << std::fixed << r.lhs;
  rhs << std::fixed << r.rhs;
  bool defaults = opt.copies == 16 && opt.vol3 == kVolumeArgument && opt.chi == 2;
  report.add("tube-volume-total",
             std::to_string(opt.copies) + " disjoint tubes around volume-" +
                 std::to_string(opt.vol3) + " cores",
             defaults ? "in [28.8, 29.0]" : "(computed)", lhs.str(),
             !defaults || (r.lhs >= 28.8 && r.lhs <= 29.0));
  report.add("euler-volume",
             "Gauss-Bonnet volume at Euler characteristic " + std::to_string(opt.chi),
             defaults ? "26.319 +/- 0.001" : "(computed)", rhs.str(),
             !defaults || std::abs(r.rhs - 26.319) <= 0.001);
  report.add("volume-contradiction", "total tube volume exceeds the ambient volume", "true",
             r.contradiction ? "true" : "false", r.contradiction);
}

void run_candidates(const Options& opt, VerificationReport& report) {
  GaussianInteger t = parse_gaussian(opt.translation);
  CandidateCircleSet set = closed_candidates(t, opt.strict);
  std::ostringstream names;
  for (std::size_t i = 0; i < set.candidates.size(); ++i) {
    if (i) names << " ";
    names << set.candidates[i].str();
  }
  bool pinned = opt.translation == "2+2i" && !opt.strict;
  std::string expected = pinned ? "C_1 C_1,1 C_1,2 C_2 C_2,3 C_5,1 C_5,2 C_6,3" : "(computed)";
  report.add("closed-candidates",
             "canonical circles small enough to carry a closed surface at translation " +
                 t.str(),
             expected, names.str(), !pinned || names.str() == expected);
}

void run_search(const std::vector<ManifoldGroupData>& datasets, const Options& opt,
                VerificationReport& report) {
  for (const auto& d : datasets) {
    std::vector<std::string> names = search_alphabet_names(d);
    for (int form = 0; form < 6; ++form) {
      if (opt.form >= 0 && form != opt.form) continue;
      std::optional<ObstructionWitness> w = witness_search(d, form, opt.max_len);
      std::string computed = "no witness";
      if (w) {
        std::ostringstream os;
        for (std::size_t i = 0; i < w->word.letters().size(); ++i) {
          const Letter& letter = w->word.letters()[i];
          if (i) os << " ";
          os << names[letter.gen];
          if (letter.exp < 0) os << "^-1";
        }
        os << " (trace " << w->trace_value << ")";
        computed = os.str();
      }
      report.add("search-" + d.name + "-form" + std::to_string(form),
                 d.name + " form A" + std::to_string(form) + ": shortest obstruction witness, "
                                                             "max length " +
                     std::to_string(opt.max_len),
                 "witness found", computed, w.has_value());
    }
  }
}

int emit(const VerificationReport& report, const Options& opt) {
  std::string rendered = opt.format == "structured" ? render_json(report) : render_text(report);
  if (opt.output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(opt.output);
    if (!out) {
      std::cerr << "error: cannot write output file '" << opt.output << "'\n";
      return 2;
    }
    out << rendered;
  }
  return report.overall() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification pipelines for the five congruence covers"};
  app.require_subcommand(1);

  Options opt;
  opt.data_dir = default_data_dir();
  app.add_option("--data", opt.data_dir, "dataset directory")->capture_default_str();
  app.add_option("--output", opt.output, "write the report to this file instead of stdout");
  app.add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  CLI::App* verify_all = app.add_subcommand("verify-all", "run every check");
  CLI::App* tables = app.add_subcommand("tables", "witness tables for all thirty rows");
  CLI::App* group_orders =
      app.add_subcommand("group-orders", "presentation quotient orders and kernel invariants");
  CLI::App* quotient_indices =
      app.add_subcommand("quotient-indices", "congruence index of each manifold group");
  CLI::App* cross_check =
      app.add_subcommand("cross-check", "reflection words against stored matrices");
  CLI::App* volume_bound = app.add_subcommand("volume-bound", "tube volume contradiction");
  CLI::App* candidates = app.add_subcommand("candidates", "closed-surface candidate circles");
  CLI::App* search = app.add_subcommand("search", "breadth-first obstruction witness search");

  // Let the global options (--data, --output, --format) appear after the
  // subcommand name as well as before it.
  for (CLI::App* cmd : {verify_all, tables, group_orders, quotient_indices, cross_check,
                        volume_bound, candidates, search})
    cmd->fallthrough();

  for (CLI::App* cmd : {tables, quotient_indices, cross_check, search})
    cmd->add_option("--manifold", opt.manifold, "restrict to one manifold (A+, B+, C+, D+, E+)");
  search->add_option("--form", opt.form, "restrict to one transported form (0..5)")
      ->check(CLI::Range(0, 5));
  search->add_option("--max-len", opt.max_len, "maximum witness word length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  volume_bound->add_option("--tol", opt.tol, "comparison tolerance")->capture_default_str();
  volume_bound->add_option("--copies", opt.copies, "number of disjoint tubes")
      ->capture_default_str();
  volume_bound->add_option("--vol3", opt.vol3, "volume of the closed 3-manifold core")
      ->capture_default_str();
  volume_bound->add_option("--chi", opt.chi, "Euler characteristic of the ambient 4-manifold")
      ->capture_default_str();
  candidates->add_option("--translation", opt.translation, "translation length to test against")
      ->capture_default_str();
  candidates->add_flag("--strict", opt.strict, "exclude the tangency (equality) case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  VerificationReport report;
  try {
    bool all = verify_all->parsed();
    std::optional<std::vector<ManifoldGroupData>> datasets;
    auto data = [&]() -> const std::vector<ManifoldGroupData>& {
      if (!datasets) datasets = load_selected(opt, report);
      return *datasets;
    };

    try {
      if (all || group_orders->parsed()) run_group_orders(report);
      if (all || quotient_indices->parsed()) run_quotient_indices(data(), report);
      if (all || cross_check->parsed()) run_cross_check(data(), report);
      if (all || tables->parsed()) run_tables(data(), report, opt.max_len);
      if (all || search->parsed()) run_search(data(), opt, report);
      if (all || volume_bound->parsed()) run_volume_bound(opt, report);
      if (all || candidates->parsed()) run_candidates(opt, report);
    } catch (const CLI::ValidationError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  } catch (const std::runtime_error& e) {
    // Dataset loading problems (missing directory, malformed file, failed
    // validation) are input errors.
    std::string what = e.what();
    if (what.find("dataset") != std::string::npos || what.find("cannot open") != std::string::npos) {
      std::cerr << "error: " << what << "\n";
      return 2;
    }
    std::cerr << "internal error: " << what << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }

  return emit(report, opt);
}
