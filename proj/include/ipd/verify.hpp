#ifndef IPD_VERIFY_HPP
#define IPD_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ipd/permutation.hpp"

namespace ipd {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  /// Permutation word, poset JSON or dissection JSON of the first failure.
  std::string counterexample;
};

/// interval_algebra, no_three_cover, classification, framed_image,
/// tree_restriction, blockwise_restriction, roundtrip_phi, roundtrip_psi,
/// realize, component_completeness, validator, counts.
const std::vector<std::string_view> &suite_names();

/// Runs one exhaustive suite over sizes up to max_n. Suites that scan all
/// diagonal subsets stop at the 8-gon; realization stops at n = 7 and the
/// validator mutation suite at n = 6. Throws OutOfDomain on unknown names.
SuiteResult run_suite(std::string_view name, int max_n, int workers = 1);

/// Independent oracle: p contains the pattern q as a subsequence.
bool contains_pattern(const Permutation &p, const Permutation &q);

} // namespace ipd

#endif
