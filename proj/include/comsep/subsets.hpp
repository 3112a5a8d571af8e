#pragma once

#include <cstdint>
#include <vector>

namespace comsep {

/// Calls `visit(mask)` for each k-subset of {0..n-1} in lexicographic order
/// of the sorted index lists. Stops early and returns true once `visit`
/// returns true.
template <class Visit>
bool any_subset_lex(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= std::uint64_t{1} << i;
    if (visit(mask)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Visits every k-subset in lexicographic order.
template <class Visit>
void for_each_subset_lex(std::size_t n, std::size_t k, Visit&& visit) {
  any_subset_lex(n, k, [&](std::uint64_t mask) {
    visit(mask);
    return false;
  });
}

}  // namespace comsep
