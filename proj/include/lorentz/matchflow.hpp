#pragma once

// S-matchings: integer transportation plans on the bipartite graph of a
// subset sequence. Ground elements and parts are 0-based in code; the
// 1-based convention only appears at the serialization boundary.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/enumerate.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/maxflow.hpp"
#include "lorentz/subset.hpp"

namespace lorentz {

/// An edge of the bipartite graph: ground element i lies in part j.
struct Edge {
  int element;
  int part;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A sequence (S_1, ..., S_n) of subsets of a ground set of size m.
class SubsetSeq {
 public:
  SubsetSeq(int m, std::vector<Subset> parts) : m_(m), parts_(std::move(parts)) {
    if (m < 1 || m > kMaxGround) throw DomainError("subset sequence: ground size must be in [1, 62]");
    if (parts_.empty()) throw DomainError("subset sequence: needs at least one part");
    const Subset full = full_subset(m);
    for (Subset s : parts_) {
      if ((s & ~full) != 0) throw DomainError("subset sequence: element outside the ground set");
    }
  }

  /// Builds from 1-indexed element lists, the external convention.
  static SubsetSeq from_lists(int m, const std::vector<std::vector<int>>& lists) {
    std::vector<Subset> parts;
    parts.reserve(lists.size());
    for (std::size_t j = 0; j < lists.size(); ++j) {
      Subset s = 0;
      for (int e : lists[j]) {
        if (e < 1 || e > m) {
          throw DomainError("subset sequence: element " + std::to_string(e) + " of part " +
                            std::to_string(j + 1) + " is outside [1, " + std::to_string(m) + "]");
        }
        s |= Subset{1} << (e - 1);
      }
      parts.push_back(s);
    }
    return SubsetSeq(m, std::move(parts));
  }

  /// The sequence ({1}, ..., {p}) on [p].
  static SubsetSeq singletons(int p) {
    std::vector<Subset> parts;
    for (int i = 0; i < p; ++i) parts.push_back(Subset{1} << i);
    return SubsetSeq(p, std::move(parts));
  }

  int ground_size() const { return m_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  Subset part(int j) const { return parts_.at(static_cast<std::size_t>(j)); }
  const std::vector<Subset>& parts() const { return parts_; }
  bool contains(int part_index, int element) const { return has(part(part_index), element); }

  /// Union of the parts indexed by the bits of `which`.
  Subset union_of(Subset which) const {
    Subset u = 0;
    for (int j : elements_of(which)) u |= part(j);
    return u;
  }

  /// Edges of the bipartite graph ordered by (element, part).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < num_parts(); ++j) {
        if (contains(j, i)) out.push_back({i, j});
      }
    }
    return out;
  }

  /// Parts containing element i, as a mask over part indices.
  Subset parts_containing(int element) const {
    Subset out = 0;
    for (int j = 0; j < num_parts(); ++j) {
      if (contains(j, element)) out |= Subset{1} << j;
    }
    return out;
  }

  friend bool operator==(const SubsetSeq&, const SubsetSeq&) = default;

 private:
  int m_;
  std::vector<Subset> parts_;
};

/// Nonnegative integer edge weights; absent edges carry weight zero.
struct MatchWitness {
  std::map<Edge, long> weights;

  /// Checks that every weighted edge exists and the margins equal alpha and beta.
  bool validates(const SubsetSeq& s, const ExpVec& alpha, const ExpVec& beta) const {
    if (static_cast<int>(alpha.size()) != s.ground_size() ||
        static_cast<int>(beta.size()) != s.num_parts()) {
      return false;
    }
    std::vector<long> rows(alpha.size(), 0);
    std::vector<long> cols(beta.size(), 0);
    for (const auto& [e, w] : weights) {
      if (w < 0 || e.element < 0 || e.element >= s.ground_size() || e.part < 0 ||
          e.part >= s.num_parts() || !s.contains(e.part, e.element)) {
        return false;
      }
      rows[static_cast<std::size_t>(e.element)] += w;
      cols[static_cast<std::size_t>(e.part)] += w;
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (rows[i] != alpha[i]) return false;
    }
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (cols[j] != beta[j]) return false;
    }
    return true;
  }
};

/// Per-edge upper bounds for restricted matchings. Edges without an entry are uncapped.
class EdgeCaps {
 public:
  EdgeCaps() = default;

  static EdgeCaps uniform(const SubsetSeq& s, long cap) {
    EdgeCaps out;
    for (const Edge& e : s.edges()) out.set(s, e, cap);
    return out;
  }

  void set(const SubsetSeq& s, Edge e, long cap) {
    if (e.element < 0 || e.element >= s.ground_size() || e.part < 0 || e.part >= s.num_parts() ||
        !s.contains(e.part, e.element)) {
      throw DomainError("edge cap on " + std::to_string(e.element + 1) + "-" +
                        std::to_string(e.part + 1) + ", which is not an edge");
    }
    if (cap < 0) throw DomainError("edge cap must be nonnegative");
    caps_[e] = cap;
  }

  std::optional<long> cap(Edge e) const {
    auto it = caps_.find(e);
    if (it == caps_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<Edge, long>& entries() const { return caps_; }

 private:
  std::map<Edge, long> caps_;
};

namespace detail {

inline void check_margins(const SubsetSeq& s, const ExpVec& alpha, const ExpVec& beta) {
  require_arity(alpha.size(), static_cast<std::size_t>(s.ground_size()), "alpha");
  require_arity(beta.size(), static_cast<std::size_t>(s.num_parts()), "beta");
  for (int a : alpha) {
    if (a < 0) throw DomainError("alpha has a negative entry");
  }
  for (int b : beta) {
    if (b < 0) throw DomainError("beta has a negative entry");
  }
}

// Source -> element (cap alpha_i) -> part (cap r_e or unbounded) -> sink (cap beta_j).
inline std::optional<MatchWitness> solve_transport(const SubsetSeq& s, const EdgeCaps* caps,
                                                   const ExpVec& alpha, const ExpVec& beta) {
  check_margins(s, alpha, beta);
  const long total_a = std::accumulate(alpha.begin(), alpha.end(), 0L);
  const long total_b = std::accumulate(beta.begin(), beta.end(), 0L);
  if (total_a != total_b) return std::nullopt;

  const int m = s.ground_size();
  const int n = s.num_parts();
  const int source = m + n;
  const int sink = m + n + 1;
  FlowNetwork net(m + n + 2);
  for (int i = 0; i < m; ++i) {
    if (alpha[static_cast<std::size_t>(i)] > 0) net.add_arc(source, i, alpha[static_cast<std::size_t>(i)]);
  }
  for (int j = 0; j < n; ++j) {
    if (beta[static_cast<std::size_t>(j)] > 0) net.add_arc(m + j, sink, beta[static_cast<std::size_t>(j)]);
  }
  std::vector<std::pair<Edge, int>> middle;
  for (const Edge& e : s.edges()) {
    if (alpha[static_cast<std::size_t>(e.element)] == 0 || beta[static_cast<std::size_t>(e.part)] == 0) continue;
    FlowNetwork::Capacity c = FlowNetwork::kUnbounded;
    if (caps != nullptr) {
      if (auto r = caps->cap(e)) c = *r;
    }
    if (c == 0) continue;
    middle.emplace_back(e, net.add_arc(e.element, m + e.part, c));
  }
  if (net.max_flow(source, sink) != total_a) return std::nullopt;

  MatchWitness w;
  for (const auto& [e, id] : middle) {
    if (const auto f = net.flow(id); f > 0) w.weights[e] = static_cast<long>(f);
  }
  return w;
}

}  // namespace detail

/// Whether alpha <-> beta admits an S-matching.
inline bool admits_matching(const SubsetSeq& s, const ExpVec& alpha, const ExpVec& beta) {
  return detail::solve_transport(s, nullptr, alpha, beta).has_value();
}

inline std::optional<MatchWitness> find_witness(const SubsetSeq& s, const ExpVec& alpha,
                                                const ExpVec& beta) {
  return detail::solve_transport(s, nullptr, alpha, beta);
}

/// S-matching with w_e <= caps(e) on every capped edge.
inline bool admits_restricted(const SubsetSeq& s, const EdgeCaps& caps, const ExpVec& alpha,
                              const ExpVec& beta) {
  return detail::solve_transport(s, &caps, alpha, beta).has_value();
}

inline std::optional<MatchWitness> find_restricted_witness(const SubsetSeq& s, const EdgeCaps& caps,
                                                           const ExpVec& alpha, const ExpVec& beta) {
  return detail::solve_transport(s, &caps, alpha, beta);
}

/// All beta with alpha <-> beta, in lexicographic order. Candidates come from
/// the box beta_j <= sum_{i in S_j} alpha_i with sum(beta) = sum(alpha).
inline std::vector<ExpVec> matched_degrees(const SubsetSeq& s, const ExpVec& alpha) {
  detail::require_arity(alpha.size(), static_cast<std::size_t>(s.ground_size()), "alpha");
  ExpVec bound(static_cast<std::size_t>(s.num_parts()), 0);
  for (int j = 0; j < s.num_parts(); ++j) {
    for (int i : elements_of(s.part(j))) bound[static_cast<std::size_t>(j)] += alpha[static_cast<std::size_t>(i)];
  }
  std::vector<ExpVec> out;
  for_each_bounded_composition(total_degree(alpha), bound, [&](const ExpVec& beta) {
    if (admits_matching(s, alpha, beta)) out.push_back(beta);
  });
  return out;
}

/// Composition of bipartite graphs: part j of the result is the union of
/// first's parts indexed by second's part j.
inline SubsetSeq compose_seq(const SubsetSeq& first, const SubsetSeq& second) {
  if (second.ground_size() != first.num_parts()) {
    throw ArityError("compose_seq: second sequence lives on [" + std::to_string(second.ground_size()) +
                     "] but first has " + std::to_string(first.num_parts()) + " parts");
  }
  std::vector<Subset> parts;
  parts.reserve(static_cast<std::size_t>(second.num_parts()));
  for (Subset which : second.parts()) parts.push_back(first.union_of(which));
  return SubsetSeq(first.ground_size(), std::move(parts));
}

}  // namespace lorentz
