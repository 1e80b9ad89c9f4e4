#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace raag {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First counterexample when the check fails.
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Self-checks: swap identity, the m = 3 loop identities, free counts
/// against the grid cycle rank, P against H1 of the cube complex, rewriting
/// and the spanning tree. Random cases are drawn from `seed`. With
/// `inject_fault` one expected value is perturbed so the failure path can be
/// exercised end to end.
VerifyReport run_verify_suite(std::uint64_t seed, bool inject_fault = false);

}  // namespace raag
