#pragma once

// Deterministic verification reports: a flat list of named checks, each with
// an expected and a computed value, rendered as aligned text or as a stable
// structured document suitable for golden-file comparison.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace picard {

inline constexpr const char* kToolVersion = "1.0.0";

struct ReportSection {
  std::string id;           // stable machine name, e.g. "quotient-order-6"
  std::string description;  // one-line human explanation
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string tool_version = kToolVersion;
  // (file name, FNV-1a 64 of the file bytes) for every dataset consulted.
  std::vector<std::pair<std::string, std::uint64_t>> dataset_checksums;
  std::vector<ReportSection> sections;

  void add(std::string id, std::string description, std::string expected, std::string computed,
           bool pass);
  // Convenience for checks whose pass condition is string equality.
  void add_equal(std::string id, std::string description, std::string expected,
                 std::string computed);

  bool overall() const;  // true iff every section passes
};

std::string render_text(const VerificationReport& report);
std::string render_json(const VerificationReport& report);

}  // namespace picard
