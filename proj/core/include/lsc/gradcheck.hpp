#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lsc {

// Randomized finite-difference check of grad_doc and
// penalty_value_and_grad. Each instance draws a small vocabulary, random
// virtual counts, priors and a random document of either polarity, then
// compares every analytic partial against a central difference of the
// corresponding objective term computed with plain probability arithmetic
// (no shared code with the log-space production path).
struct GradCheckOptions {
  std::uint64_t seed = 7;
  int instances = 1000;
  double rel_tol = 1e-5;
  double abs_floor = 1e-8;
  bool include_penalties = true;
  int max_vocab = 10;
  int max_doc_tokens = 8;
  double max_count = 20.0;
};

struct GradCheckResult {
  int instances = 0;
  int checks = 0;
  int failures = 0;
  double max_rel_err = 0.0;
  double seconds = 0.0;
  std::vector<std::string> failure_notes;  // first few failures, for humans

  bool passed() const { return instances > 0 && failures == 0; }
};

GradCheckResult run_gradcheck(const GradCheckOptions& options);

}  // namespace lsc
