#pragma once

#include <optional>
#include <vector>

namespace relay {

/// C(n, k) as a double, saturating at +inf.
double binomial(int n, int k);

struct CoverSearch {
  std::optional<std::vector<int>> chosen;  // indices into the input sets
  bool over_budget = false;                // search skipped because it was too large
  int reduced_sets = 0;                    // sets left after dominance pruning
};

/// Smallest family of sets covering elements 0..universe-1, restricted to at
/// most max_size sets. Dominated and duplicate sets are dropped first (the
/// earliest of equal sets survives). When C(reduced, max_size) exceeds budget
/// the search is skipped and over_budget is set.
///
/// Ties among minimum covers resolve deterministically toward lower-indexed
/// sets, so callers control tie-breaks through input order.
CoverSearch min_set_cover(const std::vector<std::vector<int>>& sets, int universe, int max_size,
                          double budget);

}  // namespace relay
