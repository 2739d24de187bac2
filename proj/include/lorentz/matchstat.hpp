#pragma once

// The matching statistic C_T(S): how many |T|-subsets B of the ground set can
// be matched bijectively to T with every t sent into S_t. Each B counts once,
// no matter how many bijections it admits.

#include <string>
#include <utility>
#include <vector>

#include "lorentz/errors.hpp"
#include "lorentz/matchflow.hpp"
#include "lorentz/numpoly.hpp"
#include "lorentz/polymat.hpp"
#include "lorentz/subset.hpp"

namespace lorentz {

namespace detail {

// Kuhn's augmenting paths between the parts in T and the elements in B.
inline bool perfectly_matchable(const SubsetSeq& s, Subset t, Subset b) {
  const auto topics = elements_of(t);
  if (topics.size() != static_cast<std::size_t>(cardinality(b))) return false;
  for (int topic : topics) {
    if ((s.part(topic) & b) == 0) return false;
  }
  std::vector<int> owner(static_cast<std::size_t>(s.ground_size()), -1);
  std::vector<bool> seen;
  auto augment = [&](auto&& self, int topic) -> bool {
    for (int e : elements_of(s.part(topic) & b)) {
      if (seen[static_cast<std::size_t>(e)]) continue;
      seen[static_cast<std::size_t>(e)] = true;
      const int prev = owner[static_cast<std::size_t>(e)];
      if (prev < 0 || self(self, prev)) {
        owner[static_cast<std::size_t>(e)] = topic;
        return true;
      }
    }
    return false;
  };
  for (int topic : topics) {
    seen.assign(static_cast<std::size_t>(s.ground_size()), false);
    if (!augment(augment, topic)) return false;
  }
  return true;
}

inline void check_topics(const SubsetSeq& s, Subset t) {
  if ((t & ~full_subset(s.num_parts())) != 0) {
    throw DomainError("topic set refers to a part outside [" + std::to_string(s.num_parts()) + "]");
  }
}

inline ExpVec indicator(std::size_t len, Subset t) {
  ExpVec e(len, 0);
  for (int i : elements_of(t)) e[static_cast<std::size_t>(i)] = 1;
  return e;
}

}  // namespace detail

/// C_T(S); T is a mask over part indices.
inline long c_t(const SubsetSeq& s, Subset t) {
  detail::check_topics(s, t);
  long count = 0;
  for_each_k_subset(s.ground_size(), cardinality(t), [&](Subset b) {
    if (detail::perfectly_matchable(s, t, b)) ++count;
  });
  return count;
}

/// Sum over r-subsets T of [n] of C_T(S) y^T.
inline Poly f_poly(const SubsetSeq& s, int r) {
  if (r < 0 || r > s.ground_size()) {
    throw DomainError("f_poly: need 0 <= r <= m (r=" + std::to_string(r) + ")");
  }
  const auto n = static_cast<std::size_t>(s.num_parts());
  Poly out(n);
  for_each_k_subset(s.num_parts(), r, [&](Subset t) {
    if (const long c = c_t(s, t); c > 0) out.add_term(detail::indicator(n, t), Rat(c));
  });
  return out;
}

/// C_T(M, S): like C_T(S) but B ranges over the bases of M.
inline long c_t_matroid(const Matroid& m, const SubsetSeq& s, Subset t) {
  if (m.ground_size() != s.ground_size()) {
    throw ArityError("c_t_matroid: matroid on " + std::to_string(m.ground_size()) + " elements, sequence on " +
                     std::to_string(s.ground_size()));
  }
  detail::check_topics(s, t);
  if (cardinality(t) != m.full_rank()) return 0;
  long count = 0;
  for (Subset b : matroid_bases(m)) {
    if (detail::perfectly_matchable(s, t, b)) ++count;
  }
  return count;
}

/// Sum over T with |T| = rank(M) of C_T(M, S) y^T.
inline Poly f_poly_matroid(const Matroid& m, const SubsetSeq& s) {
  const auto n = static_cast<std::size_t>(s.num_parts());
  Poly out(n);
  for_each_k_subset(s.num_parts(), static_cast<int>(m.full_rank()), [&](Subset t) {
    if (const long c = c_t_matroid(m, s, t); c > 0) out.add_term(detail::indicator(n, t), Rat(c));
  });
  return out;
}

struct StatTable {
  int r = 0;
  std::vector<std::pair<Subset, long>> rows;  // nonzero counts, T in lexicographic order
};

inline StatTable stat_table(const SubsetSeq& s, int r) {
  if (r < 0) throw DomainError("stat_table: r must be nonnegative");
  StatTable out{r, {}};
  for_each_k_subset(s.num_parts(), r, [&](Subset t) {
    if (const long c = c_t(s, t); c > 0) out.rows.emplace_back(t, c);
  });
  return out;
}

}  // namespace lorentz
