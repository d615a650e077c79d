#pragma once

// Self-checks run by `verify all`: each suite recomputes one family of
// identities exactly and reports pass or fail with a short detail.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mct/matrix.hpp"
#include "mct/tree.hpp"

namespace mct {

struct SuiteResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyOptions {
  SignSequence epsilon;
  int n_max = 5;
  int samples = 1000;
  std::uint64_t seed = 0;
};

struct VerifyReport {
  std::string summary;  // e.g. "clusters=42 trees=42 bijection=ok theorem2=ok"
  std::vector<SuiteResult> suites;  // sorted by name
  bool ok() const;
};

VerifyReport run_verification(const VerifyOptions& options);

// Uniform draws built from raw 64-bit output so that streams are identical
// across standard libraries.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  Int between(Int low, Int high) { return low + static_cast<Int>(below(static_cast<std::uint64_t>(high - low + 1))); }
  Rational rational(Int magnitude, Int max_denominator);
  SignSequence epsilon(int n);
  // Rational point with pairwise distinct coordinates.
  RationalVector distinct_point(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mct
