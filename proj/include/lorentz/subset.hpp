#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace lorentz {

/// Subset of a small ground set {0, ..., m-1} stored as a bit mask.
using Subset = std::uint64_t;

inline constexpr int kMaxGround = 62;

inline constexpr Subset full_subset(int m) { return m == 0 ? Subset{0} : (Subset{1} << m) - 1; }
inline constexpr bool has(Subset s, int i) { return (s >> i) & 1U; }
inline constexpr int cardinality(Subset s) { return std::popcount(s); }

inline std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline Subset subset_of(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) s |= Subset{1} << e;
  return s;
}

/// Lexicographic order on the sorted element lists: {0,1} < {0,2} < {1,2}.
inline bool lex_less(Subset a, Subset b) {
  auto ea = elements_of(a);
  auto eb = elements_of(b);
  return ea < eb;
}

/// Visits every k-subset of {0, ..., m-1} in lexicographic order.
inline void for_each_k_subset(int m, int k, const std::function<void(Subset)>& visit) {
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(subset_of(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace lorentz
