#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mwvortex/coherence.hpp"

namespace mwvortex {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> metrics;
};

struct ValidateOptions {
  int threads = 1;
  int grid_n = 256;
  std::uint64_t seed = 20240611;
  CoherenceSet coherence{};
};

// Free-text sections that accompany the criteria.
struct ValidateNotes {
  std::string errata;
  std::string discrepancy;
  std::string stark;
};

CriterionResult check_coherence_oracle(const ValidateOptions& o, ValidateNotes& notes);
CriterionResult check_closed_forms(const ValidateOptions& o, ValidateNotes& notes);
CriterionResult check_efficiency_shapes(const ValidateOptions& o);
CriterionResult check_lambda_dichotomy(const ValidateOptions& o);
CriterionResult check_oam_conservation(const ValidateOptions& o);
CriterionResult check_petals(const ValidateOptions& o);
CriterionResult check_ring_split(const ValidateOptions& o);
CriterionResult check_hollow(const ValidateOptions& o);
CriterionResult check_cnot(const ValidateOptions& o);
CriterionResult check_stark(const ValidateOptions& o, ValidateNotes& notes);

struct ValidateReport {
  std::vector<CriterionResult> criteria;
  ValidateNotes notes;
  bool all_pass() const;
};

// Criteria 1-10 once.
ValidateReport run_core_criteria(const ValidateOptions& o);
// Criteria 1-10, then 11: a second pass whose serialized files must match byte for byte.
ValidateReport run_validation(const ValidateOptions& o);

// Serialized result files. None of them carries a timestamp.
std::string report_csv(const ValidateReport& r);
std::string errata_text(const ValidateReport& r);
std::string discrepancy_text(const ValidateReport& r);

std::string format_line(const CriterionResult& c);

}  // namespace mwvortex
