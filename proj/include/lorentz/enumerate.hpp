#pragma once

#include <functional>
#include <numeric>
#include <vector>

namespace lorentz {

using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Visits every vector v with 0 <= v <= bound componentwise, in lexicographic order.
inline void for_each_in_box(const ExpVec& bound, const std::function<void(const ExpVec&)>& visit) {
  for (int b : bound) {
    if (b < 0) return;
  }
  ExpVec v(bound.size(), 0);
  while (true) {
    visit(v);
    int i = static_cast<int>(v.size()) - 1;
    while (i >= 0 && v[i] == bound[i]) {
      v[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++v[i];
  }
}

/// Visits every v >= 0 with sum(v) == total and v <= bound, in lexicographic order
/// (largest first coordinate last). An empty bound visits the empty vector iff total == 0.
inline void for_each_bounded_composition(int total, const ExpVec& bound,
                                         const std::function<void(const ExpVec&)>& visit) {
  const std::size_t len = bound.size();
  if (total < 0) return;
  if (len == 0) {
    if (total == 0) visit(ExpVec{});
    return;
  }
  // suffix capacity lets us prune branches that cannot reach the total
  std::vector<long> room(len + 1, 0);
  for (std::size_t i = len; i-- > 0;) room[i] = room[i + 1] + std::max(bound[i], 0);
  if (room[0] < total) return;
  ExpVec v(len, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == len) {
      if (left <= bound[i]) {
        v[i] = left;
        visit(v);
      }
      return;
    }
    const int lo = static_cast<int>(std::max<long>(0, left - room[i + 1]));
    const int hi = std::min(left, bound[i]);
    for (int x = lo; x <= hi; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
    v[i] = 0;
  };
  rec(0, total);
}

/// All v >= 0 of length len with sum(v) == total.
inline void for_each_composition(int total, std::size_t len,
                                 const std::function<void(const ExpVec&)>& visit) {
  for_each_bounded_composition(total, ExpVec(len, total), visit);
}

}  // namespace lorentz
