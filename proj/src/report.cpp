#include "picard/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace picard {
namespace {

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::setfill('0') << std::setw(16) << v;
  return os.str();
}

}  // namespace

void VerificationReport::add(std::string id, std::string description, std::string expected,
                             std::string computed, bool pass) {
  sections.push_back({std::move(id), std::move(description), std::move(expected),
                      std::move(computed), pass});
}

void VerificationReport::add_equal(std::string id, std::string description, std::string expected,
                                   std::string computed) {
  const bool pass = expected == computed;
  add(std::move(id), std::move(description), std::move(expected), std::move(computed), pass);
}

bool VerificationReport::overall() const {
  return std::all_of(sections.begin(), sections.end(),
                     [](const ReportSection& s) { return s.pass; });
}

std::string render_text(const VerificationReport& report) {
  std::size_t id_width = 0;
  for (const ReportSection& s : report.sections) id_width = std::max(id_width, s.id.size());

  std::ostringstream os;
  os << "picard-verify " << report.tool_version << "\n";
  for (const auto& [name, sum] : report.dataset_checksums)
    os << "dataset " << name << " " << hex64(sum) << "\n";
  if (!report.dataset_checksums.empty()) os << "\n";
  for (const ReportSection& s : report.sections) {
    os << (s.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(static_cast<int>(id_width))
       << s.id << "  " << s.description << "\n";
    os << "       " << std::setw(static_cast<int>(id_width)) << "" << "  expected: " << s.expected
       << "\n";
    os << "       " << std::setw(static_cast<int>(id_width)) << "" << "  computed: " << s.computed
       << "\n";
  }
  os << "\noverall: " << (report.overall() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["tool_version"] = report.tool_version;
  nlohmann::ordered_json datasets = nlohmann::ordered_json::array();
  for (const auto& [name, sum] : report.dataset_checksums)
    datasets.push_back({{"file", name}, {"fnv1a64", hex64(sum)}});
  j["datasets"] = std::move(datasets);
  nlohmann::ordered_json sections = nlohmann::ordered_json::array();
  for (const ReportSection& s : report.sections)
    sections.push_back({{"id", s.id},
                        {"description", s.description},
                        {"expected", s.expected},
                        {"computed", s.computed},
                        {"status", s.pass ? "pass" : "fail"}});
  j["sections"] = std::move(sections);
  j["overall"] = report.overall() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

}  // namespace picard
