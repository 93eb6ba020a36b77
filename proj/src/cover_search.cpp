#include "relay/cover_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace relay {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const std::vector<int>& elems, std::size_t words) {
  Bits b(words, 0);
  for (int e : elems) b[e / 64] |= std::uint64_t{1} << (e % 64);
  return b;
}

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

struct Search {
  const std::vector<Bits>& sets;
  const std::vector<std::vector<int>>& containing;  // element -> reduced sets holding it
  int universe;
  std::vector<int> pick;

  // Branch on the first uncovered element; every cover must use one of the
  // sets that hold it. Lower-indexed sets are tried first.
  bool dfs(Bits& covered, int slots) {
    int first = -1;
    for (int e = 0; e < universe; ++e) {
      if (!(covered[e / 64] >> (e % 64) & 1)) {
        first = e;
        break;
      }
    }
    if (first < 0) return true;
    if (slots == 0) return false;
    for (int s : containing[first]) {
      Bits next = covered;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] |= sets[s][w];
      pick.push_back(s);
      if (dfs(next, slots - 1)) return true;
      pick.pop_back();
    }
    return false;
  }
};

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (int i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (!std::isfinite(out)) return std::numeric_limits<double>::infinity();
  }
  return std::round(out);
}

CoverSearch min_set_cover(const std::vector<std::vector<int>>& sets, int universe, int max_size,
                          double budget) {
  CoverSearch result;
  if (universe == 0) {
    result.chosen = std::vector<int>{};
    return result;
  }
  const std::size_t words = (static_cast<std::size_t>(universe) + 63) / 64;
  std::vector<Bits> bits;
  bits.reserve(sets.size());
  for (const auto& s : sets) bits.push_back(to_bits(s, words));

  std::vector<int> keep;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bool dominated = std::all_of(bits[i].begin(), bits[i].end(), [](auto w) { return w == 0; });
    for (std::size_t j = 0; j < bits.size() && !dominated; ++j) {
      if (i == j || !subset_of(bits[i], bits[j])) continue;
      // Equal sets: the earlier one survives.
      dominated = !subset_of(bits[j], bits[i]) || j < i;
    }
    if (!dominated) keep.push_back(static_cast<int>(i));
  }
  result.reduced_sets = static_cast<int>(keep.size());

  if (binomial(static_cast<int>(keep.size()), max_size) > budget) {
    result.over_budget = true;
    return result;
  }

  std::vector<Bits> reduced;
  for (int i : keep) reduced.push_back(bits[i]);
  std::vector<std::vector<int>> containing(universe);
  for (std::size_t s = 0; s < reduced.size(); ++s) {
    for (int e = 0; e < universe; ++e) {
      if (reduced[s][e / 64] >> (e % 64) & 1) containing[e].push_back(static_cast<int>(s));
    }
  }

  Search search{reduced, containing, universe, {}};
  for (int size = 1; size <= max_size; ++size) {
    Bits covered(words, 0);
    search.pick.clear();
    if (search.dfs(covered, size)) {
      std::vector<int> chosen;
      for (int s : search.pick) chosen.push_back(keep[s]);
      std::sort(chosen.begin(), chosen.end());
      result.chosen = std::move(chosen);
      return result;
    }
  }
  return result;
}

}  // namespace relay
