#pragma once

#include <string>
#include <vector>

#include "gamecat/generate.hpp"

namespace gamecat {

struct LawFailure {
  std::size_t trial = 0;
  std::string inputs;    // JSON documents sufficient to replay the trial
  std::string observed;
  std::string expected;

  bool operator==(const LawFailure&) const = default;
};

struct VerifyReport {
  std::string law;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t skipped = 0;  // instances dropped for budget, never passed
  std::vector<LawFailure> failures;

  bool pass() const { return failures.empty(); }
};

// Canonical JSON rendering (sorted keys, 2-space indent).
std::string report_to_json(const VerifyReport& r);

// Names of every law the harness knows, sorted.
std::vector<std::string> law_catalog();

// Runs `trials` seeded instances of one law; trial k draws its instance
// from a SplitMix64 stream seeded with p.seed + k. Unknown laws raise
// validation_error. Note that morphisms_preserve_ne is a deliberate
// negative control: its trial 0 is the fixed two-game counterexample and
// the law is expected to fail.
VerifyReport check_law(const std::string& law, const GenParams& p,
                       std::size_t trials);

}  // namespace gamecat
