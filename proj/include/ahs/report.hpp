#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ahs/serialize.hpp"

namespace ahs {

// Everything a suite run depends on.  Identical config and seed means a
// byte-identical report, independent of worker count.
struct RunConfig {
  std::uint64_t seed = 7;
  int q_order = 40;      // base truncation of the form evaluators
  int jet_order = 8;     // order for jets where not fixed by the check
  double tol = 1e-7;     // residual tolerance for floating verdicts
  double height_min = 1.0;
  double height_max = 2.0;
  int words = 5;         // group words sampled per check
  int word_len = 8;      // maximum word length
  int points = 10;       // base points sampled per word
  int n_lo = 2;
  int n_hi = 6;
  int workers = 1;       // execution detail; excluded from the report echo
  std::string out_path;
  std::string format = "json";  // json | csv
};

struct CaseRecord {
  std::string key;      // unique, sortable id
  std::string verdict;  // PASS | FAIL | DEGENERATE
  double residual = 0.0;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<CaseRecord> cases;
  // Summary numbers/labels, in fixed insertion order.
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::pair<std::string, std::string>> labels;
  std::vector<Report> children;

  void sort_cases();
  long count_verdict(const std::string& v) const;
  // FAIL if any case failed (recursively); else DEGENERATE if any case
  // degenerated; else PASS.
  std::string aggregate_verdict() const;
};

ordered_json report_to_json(const Report& r, const RunConfig& cfg);
std::string report_to_csv(const Report& r);

// 0 all pass, 1 any fail, 2 degenerate-only.
int exit_code_for(const Report& r);

}  // namespace ahs
