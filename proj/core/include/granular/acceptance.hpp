#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "granular/angle.hpp"
#include "granular/dyadic.hpp"

namespace granular {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double millis;
};

/// One (level, triple, theta) combination where the superposition correlation
/// differs from cos(theta).
struct SuperposeDeviation {
  unsigned level;
  std::uint32_t triple_index;
  AngleCos theta;
  Dyadic measured;
  Dyadic expected;
};

struct SuperposeSweepSummary {
  unsigned level;
  std::uint64_t combos;
  std::uint64_t exact;
  std::uint64_t deviations;
};

struct AcceptanceOptions {
  bool strict = false;           // deviations in the superposition sweep fail the run
  unsigned cauchy_lambda_count = 100;
  unsigned cauchy_tail_window = 8;
  std::size_t deviation_sample_cap = 64;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  std::vector<SuperposeSweepSummary> sweep_summaries;
  std::vector<SuperposeDeviation> deviation_sample;
  std::uint64_t deviation_total = 0;

  bool all_pass() const;
};

/// Runs every acceptance criterion and returns per-criterion pass/fail rows
/// plus the structured superposition-sweep data.
AcceptanceReport run_acceptance(const AcceptanceOptions& options = {});

}  // namespace granular
