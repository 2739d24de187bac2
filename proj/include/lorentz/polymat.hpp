#pragma once

// Polymatroids as explicit rank tables over 2^[m], with the constructions
// used to study supports of induced polynomials: free polymatroids, direct
// sums, induction along a subset sequence, rational linear realizations and
// the Hall-Rado membership criterion.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/enumerate.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/matchflow.hpp"
#include "lorentz/numpoly.hpp"
#include "lorentz/subset.hpp"

namespace lorentz {

/// Which polymatroid (or matroid) axiom failed, with the sets that show it.
struct AxiomViolation {
  enum class Axiom { kTableSize, kNegative, kEmptySetRank, kMonotone, kSubmodular, kMatroidBound };
  Axiom axiom;
  Subset first = 0;
  Subset second = 0;

  std::string describe() const {
    auto set_text = [](Subset s) {
      std::string out = "{";
      bool first_elem = true;
      for (int e : elements_of(s)) {
        out += (first_elem ? "" : ",") + std::to_string(e + 1);
        first_elem = false;
      }
      return out + "}";
    };
    switch (axiom) {
      case Axiom::kTableSize:
        return "rank table size is not a power of two";
      case Axiom::kNegative:
        return "negative rank at " + set_text(first);
      case Axiom::kEmptySetRank:
        return "rank of the empty set is not zero";
      case Axiom::kMonotone:
        return "not monotone: rank" + set_text(first) + " > rank" + set_text(second);
      case Axiom::kSubmodular:
        return "not submodular at I=" + set_text(first) + ", J=" + set_text(second);
      case Axiom::kMatroidBound:
        return "rank" + set_text(first) + " exceeds its cardinality";
    }
    return "unknown axiom";
  }
};

class AxiomError : public DomainError {
 public:
  explicit AxiomError(AxiomViolation v) : DomainError(v.describe()), violation_(v) {}
  const AxiomViolation& violation() const { return violation_; }

 private:
  AxiomViolation violation_;
};

/// Local checks suffice: monotone on single additions, submodular on pairs
/// I+i, I+j (equivalent to the global inequalities).
inline std::optional<AxiomViolation> check_polymatroid_axioms(const std::vector<long>& table) {
  using A = AxiomViolation::Axiom;
  const std::size_t size = table.size();
  if (size == 0 || (size & (size - 1)) != 0 || size > (std::size_t{1} << 24)) {
    return AxiomViolation{A::kTableSize};
  }
  const int m = std::countr_zero(size);
  for (Subset s = 0; s < size; ++s) {
    if (table[s] < 0) return AxiomViolation{A::kNegative, s};
  }
  if (table[0] != 0) return AxiomViolation{A::kEmptySetRank};
  for (Subset s = 0; s < size; ++s) {
    for (int i = 0; i < m; ++i) {
      if (has(s, i)) continue;
      const Subset si = s | (Subset{1} << i);
      if (table[s] > table[si]) return AxiomViolation{A::kMonotone, s, si};
      for (int j = i + 1; j < m; ++j) {
        if (has(s, j)) continue;
        const Subset sj = s | (Subset{1} << j);
        if (table[si] + table[sj] < table[si | sj] + table[s]) {
          return AxiomViolation{A::kSubmodular, si, sj};
        }
      }
    }
  }
  return std::nullopt;
}

class Polymatroid {
 public:
  /// Validates all three axioms; throws AxiomError naming the violation.
  static Polymatroid from_table(std::vector<long> table) {
    if (auto v = check_polymatroid_axioms(table)) throw AxiomError(*v);
    return Polymatroid(std::move(table));
  }

  int ground_size() const { return std::countr_zero(table_.size()); }
  long rank(Subset s) const { return table_.at(s); }
  long full_rank() const { return table_.back(); }
  const std::vector<long>& table() const { return table_; }

  friend bool operator==(const Polymatroid&, const Polymatroid&) = default;

 private:
  explicit Polymatroid(std::vector<long> table) : table_(std::move(table)) {}
  std::vector<long> table_;
};

inline std::optional<AxiomViolation> check_matroid_bound(const Polymatroid& p) {
  for (Subset s = 0; s < p.table().size(); ++s) {
    if (p.rank(s) > cardinality(s)) return AxiomViolation{AxiomViolation::Axiom::kMatroidBound, s};
  }
  return std::nullopt;
}

class Matroid {
 public:
  explicit Matroid(Polymatroid p) : underlying_(std::move(p)) {
    if (auto v = check_matroid_bound(underlying_)) throw AxiomError(*v);
  }
  static Matroid from_table(std::vector<long> table) {
    return Matroid(Polymatroid::from_table(std::move(table)));
  }

  const Polymatroid& polymatroid() const { return underlying_; }
  int ground_size() const { return underlying_.ground_size(); }
  long rank(Subset s) const { return underlying_.rank(s); }
  long full_rank() const { return underlying_.full_rank(); }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Polymatroid underlying_;
};

inline Polymatroid uniform_polymatroid_table(int m, long r) {
  std::vector<long> table(std::size_t{1} << m);
  for (Subset s = 0; s < table.size(); ++s) table[s] = std::min<long>(cardinality(s), r);
  return Polymatroid::from_table(std::move(table));
}

/// The uniform matroid U_{r,m}.
inline Matroid uniform_matroid(int m, long r) { return Matroid(uniform_polymatroid_table(m, r)); }

/// rank(A) = r for every nonempty A; its base polytope is the dilated simplex.
inline Polymatroid free_polymatroid(int n, long r) {
  if (n < 0 || n > kMaxGround) throw DomainError("free_polymatroid: bad ground size");
  if (r < 0) throw DomainError("free_polymatroid: negative rank");
  std::vector<long> table(std::size_t{1} << n, r);
  table[0] = 0;
  return Polymatroid::from_table(std::move(table));
}

/// Ground sets are concatenated in list order.
inline Polymatroid direct_sum(const std::vector<Polymatroid>& parts) {
  if (parts.empty()) throw DomainError("direct_sum: empty list");
  int m = 0;
  for (const auto& p : parts) m += p.ground_size();
  if (m > 24) throw DomainError("direct_sum: ground set too large for an explicit table");
  std::vector<long> table(std::size_t{1} << m, 0);
  for (Subset s = 0; s < table.size(); ++s) {
    int offset = 0;
    long r = 0;
    for (const auto& p : parts) {
      const Subset local = (s >> offset) & full_subset(p.ground_size());
      r += p.rank(local);
      offset += p.ground_size();
    }
    table[s] = r;
  }
  return Polymatroid::from_table(std::move(table));
}

/// rank(I) = rank_P(union of S_i for i in I).
inline Polymatroid induce_polymatroid(const Polymatroid& p, const SubsetSeq& s) {
  if (p.ground_size() != s.ground_size()) {
    throw ArityError("induce_polymatroid: polymatroid on " + std::to_string(p.ground_size()) +
                     " elements, sequence on " + std::to_string(s.ground_size()));
  }
  std::vector<long> table(std::size_t{1} << s.num_parts());
  for (Subset i = 0; i < table.size(); ++i) table[i] = p.rank(s.union_of(i));
  return Polymatroid::from_table(std::move(table));
}

/// rank(I) = min over J in I of |I - J| + rank_P(union of S_j for j in J).
/// Equals min(|I|, rank_P(union of S_i)) whenever that function is a matroid rank.
inline Matroid induce_matroid(const Polymatroid& p, const SubsetSeq& s) {
  const auto induced = induce_polymatroid(p, s);
  std::vector<long> table(induced.table().size());
  for (Subset i = 0; i < table.size(); ++i) {
    long best = cardinality(i);
    for (Subset j = i;; j = (j - 1) & i) {
      best = std::min<long>(best, cardinality(i & ~j) + induced.rank(j));
      if (j == 0) break;
    }
    table[i] = best;
  }
  return Matroid::from_table(std::move(table));
}

/// P restricted to the elements of `keep`, renumbered in increasing order.
inline Polymatroid restriction(const Polymatroid& p, Subset keep) {
  const auto kept = elements_of(keep);
  std::vector<long> table(std::size_t{1} << kept.size());
  for (Subset local = 0; local < table.size(); ++local) {
    Subset global = 0;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (has(local, static_cast<int>(k))) global |= Subset{1} << kept[k];
    }
    table[local] = p.rank(global);
  }
  return Polymatroid::from_table(std::move(table));
}

/// Inequality test for x in Q(P).
inline bool in_base_polytope(const Polymatroid& p, const ExpVec& x) {
  detail::require_arity(x.size(), static_cast<std::size_t>(p.ground_size()), "base polytope point");
  long total = 0;
  for (int v : x) {
    if (v < 0) return false;
    total += v;
  }
  if (total != p.full_rank()) return false;
  for (Subset s = 1; s < p.table().size(); ++s) {
    long sum = 0;
    for (int i : elements_of(s)) sum += x[static_cast<std::size_t>(i)];
    if (sum > p.rank(s)) return false;
  }
  return true;
}

/// Lattice points of the base polytope, by a box scan x_i <= rank({i})
/// pruned with every inequality on the prefix. Lexicographic order.
inline std::vector<ExpVec> base_points(const Polymatroid& p) {
  const int m = p.ground_size();
  std::vector<ExpVec> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  ExpVec x(static_cast<std::size_t>(m), 0);
  const long target = p.full_rank();
  auto prefix_ok = [&](int i) {
    // every subset of {0..i} that contains i
    const Subset lower = full_subset(i);
    for (Subset rest = lower;; rest = (rest - 1) & lower) {
      const Subset s = rest | (Subset{1} << i);
      long sum = 0;
      for (int e : elements_of(s)) sum += x[static_cast<std::size_t>(e)];
      if (sum > p.rank(s)) return false;
      if (rest == 0) break;
    }
    return true;
  };
  auto rec = [&](auto&& self, int i, long used) -> void {
    if (i == m) {
      if (used == target) out.push_back(x);
      return;
    }
    const long cap = std::min(p.rank(Subset{1} << i), target - used);
    for (long v = 0; v <= cap; ++v) {
      x[static_cast<std::size_t>(i)] = static_cast<int>(v);
      if (!prefix_ok(i)) break;  // sums only grow with v
      self(self, i + 1, used + v);
    }
    x[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

/// The polymatroid whose base lattice points are supp(f), if there is one.
/// The candidate rank is rank(I) = max over the support of sum_{i in I} alpha_i,
/// accepted only when its base points reproduce the support exactly.
template <class Coeff>
std::optional<Polymatroid> support_polymatroid(const Polynomial<Coeff>& f) {
  const auto h = is_homogeneous(f);
  if (!h) throw DomainError("support_polymatroid: polynomial is not homogeneous");
  if (f.is_zero()) return std::nullopt;
  const int m = static_cast<int>(f.nvars());
  if (m > 24) throw DomainError("support_polymatroid: too many variables");
  std::vector<long> table(std::size_t{1} << m, 0);
  for (const auto& [alpha, c] : f.terms()) {
    for (Subset s = 1; s < table.size(); ++s) {
      long sum = 0;
      for (int i : elements_of(s)) sum += alpha[static_cast<std::size_t>(i)];
      table[s] = std::max(table[s], sum);
    }
  }
  if (check_polymatroid_axioms(table)) return std::nullopt;
  auto candidate = Polymatroid::from_table(std::move(table));
  auto points = base_points(candidate);
  auto supp = f.support();
  std::sort(supp.begin(), supp.end());
  if (points != supp) return std::nullopt;
  return candidate;
}

/// A subspace L of V_1 (+) ... (+) V_m spanned by the rows of `gens`, with
/// dim V_i = blockdims[i].
class LinReal {
 public:
  LinReal(std::vector<int> blockdims, RatMatrix gens) : blockdims_(std::move(blockdims)), gens_(std::move(gens)) {
    std::size_t width = 0;
    for (int d : blockdims_) {
      if (d < 1) throw DomainError("linear realization: block dimensions must be positive");
      width += static_cast<std::size_t>(d);
    }
    if (blockdims_.empty()) throw DomainError("linear realization: needs at least one block");
    if (gens_.rows() > 0 && gens_.cols() != width) {
      throw ArityError("linear realization: generator width " + std::to_string(gens_.cols()) +
                       " does not match block total " + std::to_string(width));
    }
    if (gens_.rows() == 0) gens_ = RatMatrix(0, width);
  }

  const std::vector<int>& blockdims() const { return blockdims_; }
  const RatMatrix& gens() const { return gens_; }
  int num_blocks() const { return static_cast<int>(blockdims_.size()); }

  /// Columns belonging to the blocks in `blocks`, in block order.
  std::vector<std::size_t> columns_of(Subset blocks) const {
    std::vector<std::size_t> cols;
    std::size_t offset = 0;
    for (int b = 0; b < num_blocks(); ++b) {
      const auto d = static_cast<std::size_t>(blockdims_[static_cast<std::size_t>(b)]);
      if (has(blocks, b)) {
        for (std::size_t k = 0; k < d; ++k) cols.push_back(offset + k);
      }
      offset += d;
    }
    return cols;
  }

 private:
  std::vector<int> blockdims_;
  RatMatrix gens_;
};

/// rank(A) = dim of the projection of L onto the blocks in A.
inline Polymatroid linreal_rank(const LinReal& r) {
  const int m = r.num_blocks();
  if (m > 20) throw DomainError("linreal_rank: too many blocks");
  std::vector<long> table(std::size_t{1} << m, 0);
  for (Subset a = 1; a < table.size(); ++a) {
    table[a] = static_cast<long>(rank(r.gens().select_columns(r.columns_of(a))));
  }
  return Polymatroid::from_table(std::move(table));
}

/// Image of L under V_[m] -> V_{S_1} (+) ... (+) V_{S_n}.
inline LinReal linreal_induce(const LinReal& r, const SubsetSeq& s) {
  if (s.ground_size() != r.num_blocks()) {
    throw ArityError("linreal_induce: sequence on " + std::to_string(s.ground_size()) +
                     " elements, realization has " + std::to_string(r.num_blocks()) + " blocks");
  }
  std::vector<int> dims;
  std::vector<std::size_t> cols;
  for (Subset part : s.parts()) {
    int d = 0;
    for (int i : elements_of(part)) d += r.blockdims()[static_cast<std::size_t>(i)];
    const auto block_cols = r.columns_of(part);
    cols.insert(cols.end(), block_cols.begin(), block_cols.end());
    // an empty part still needs a positive-dimensional block; use one zero column
    if (d == 0) {
      d = 1;
      cols.push_back(static_cast<std::size_t>(-1));
    }
    dims.push_back(d);
  }
  RatMatrix gens(r.gens().rows(), cols.size());
  for (std::size_t row = 0; row < gens.rows(); ++row) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] != static_cast<std::size_t>(-1)) gens(row, c) = r.gens()(row, cols[c]);
    }
  }
  return LinReal(std::move(dims), std::move(gens));
}

/// Both Hall-Rado routes for delta in Q(I_E(P)).
struct HallRadoResult {
  bool by_rank = false;      // inequality check against the induced rank function
  bool by_matching = false;  // some gamma in Q(P|U), U = union of the E_j, matches delta
  std::optional<ExpVec> gamma;
};

inline HallRadoResult hall_rado_both(const Polymatroid& p, const SubsetSeq& eseq, const ExpVec& delta) {
  if (p.ground_size() != eseq.ground_size()) {
    throw ArityError("hall_rado: polymatroid and sequence ground sets differ");
  }
  detail::require_arity(delta.size(), static_cast<std::size_t>(eseq.num_parts()), "delta");
  HallRadoResult out;
  out.by_rank = in_base_polytope(induce_polymatroid(p, eseq), delta);

  const Subset covered = eseq.union_of(full_subset(eseq.num_parts()));
  const auto kept = elements_of(covered);
  for (const ExpVec& local : base_points(restriction(p, covered))) {
    ExpVec gamma(static_cast<std::size_t>(p.ground_size()), 0);
    for (std::size_t k = 0; k < kept.size(); ++k) gamma[static_cast<std::size_t>(kept[k])] = local[k];
    if (admits_matching(eseq, gamma, delta)) {
      out.by_matching = true;
      out.gamma = gamma;
      break;
    }
  }
  return out;
}

/// Membership of delta in Q(I_E(P)); throws InternalError if the two routes disagree.
inline bool hall_rado_member(const Polymatroid& p, const SubsetSeq& eseq, const ExpVec& delta) {
  const auto r = hall_rado_both(p, eseq, delta);
  if (r.by_rank != r.by_matching) {
    throw InternalError("hall_rado_member: rank route and matching route disagree");
  }
  return r.by_rank;
}

/// All bases, in lexicographic order of their element lists.
inline std::vector<Subset> matroid_bases(const Matroid& m) {
  std::vector<Subset> out;
  const long r = m.full_rank();
  for_each_k_subset(m.ground_size(), static_cast<int>(r), [&](Subset b) {
    if (m.rank(b) == r) out.push_back(b);
  });
  return out;
}

}  // namespace lorentz
