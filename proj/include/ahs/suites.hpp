#pragma once

#include <string>
#include <vector>

#include "ahs/equivariant.hpp"
#include "ahs/report.hpp"

namespace ahs {

// Verification suites behind the CLI.  Each builds its case list up front
// from (seed, suite, case-index) substreams, so the report is a pure
// function of the config: identical bytes across runs and worker counts.
enum class SuiteName {
  schwarzian_props,
  qm_checks,
  sl2,
  main_theorem,
  converse,
  all,
};

SuiteName parse_suite(const std::string& name);
std::string suite_label(SuiteName s);

Report run_suite(SuiteName s, const RunConfig& cfg);

// Deterministic (word, point) sampler shared by the suites and the CLI:
// cfg.words group words (length <= cfg.word_len, c != 0 when require_c)
// times cfg.points base points each, redrawing a point (at most 50 tries)
// until jets of h at z and g z both evaluate cleanly at order n_hi + 1.
// The tag isolates substreams, so different callers never share draws.
std::vector<GZSample> sample_gz(const EquivariantFn& h, const RunConfig& cfg,
                                const std::string& tag, bool require_c);

}  // namespace ahs
