#ifndef ACTFORGE_SUITE_HPP
#define ACTFORGE_SUITE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "actforge/congruence.hpp"

namespace actforge {

// Reference implementation for the closure oracle: repeatedly symmetrize,
// transitively close and multiply the seeded relation until stable.
// Returns class ids canonicalized by first occurrence.  Deliberately
// independent of the union-find path.
std::vector<std::uint32_t> naive_closure_partition(
    const FiniteAct& a, std::span<const ElemPair> pairs);

std::vector<std::uint32_t> canonical_partition(
    std::span<const std::uint32_t> class_of);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0 = no stated limit
};

struct SuiteOptions {
  std::uint64_t seed = 0xAC7F04D5ULL;
  bool verbose = false;
};

// Runs all acceptance criteria over the standard finite family and returns
// one result per criterion.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace actforge

#endif  // ACTFORGE_SUITE_HPP
