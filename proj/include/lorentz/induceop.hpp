#pragma once

// Linear operators R[x_1..x_m]_kappa -> R[y_1..y_n] stored as explicit tables
// alpha -> T(x^[alpha]), together with the inducing operator I_S, the
// substitution operators f(x) -> f(Ay), symbols, and the families that
// interpolate between them.

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/enumerate.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/matchflow.hpp"
#include "lorentz/numpoly.hpp"

namespace lorentz {

/// Table alpha -> T(x^[alpha]) for every 0 <= alpha <= kappa.
template <class Coeff>
class OperatorBox {
 public:
  using table_type = std::map<ExpVec, Polynomial<Coeff>>;

  OperatorBox(ExpVec kappa, std::size_t n_out, table_type table)
      : kappa_(std::move(kappa)), n_out_(n_out), table_(std::move(table)) {
    if (kappa_.empty()) throw ArityError("operator box: kappa must be nonempty");
    if (n_out_ == 0) throw ArityError("operator box: needs at least one output variable");
    for (int k : kappa_) {
      if (k < 0) throw DomainError("operator box: negative kappa entry");
    }
    std::size_t expected = 0;
    for_each_in_box(kappa_, [&](const ExpVec& alpha) {
      ++expected;
      auto it = table_.find(alpha);
      if (it == table_.end()) table_.emplace(alpha, Polynomial<Coeff>(n_out_));
      else detail::require_arity(it->second.nvars(), n_out_, "operator box entry");
    });
    if (table_.size() != expected) throw DomainError("operator box: table has entries outside the box");
  }

  template <class Fn>
  static OperatorBox build(const ExpVec& kappa, std::size_t n_out, Fn&& image_of) {
    table_type table;
    for_each_in_box(kappa, [&](const ExpVec& alpha) { table.emplace(alpha, image_of(alpha)); });
    return OperatorBox(kappa, n_out, std::move(table));
  }

  const ExpVec& kappa() const { return kappa_; }
  std::size_t n_in() const { return kappa_.size(); }
  std::size_t n_out() const { return n_out_; }
  const table_type& table() const { return table_; }

  const Polynomial<Coeff>& image(const ExpVec& alpha) const {
    auto it = table_.find(alpha);
    if (it == table_.end()) throw DomainError("operator box: exponent outside the box");
    return it->second;
  }

  /// T(f) for f supported in the box.
  Polynomial<Coeff> apply(const Polynomial<Coeff>& f) const {
    detail::require_arity(f.nvars(), n_in(), "operator input");
    Polynomial<Coeff> out(n_out_);
    for (const auto& [alpha, c] : f.terms()) {
      out += image(alpha) * (c * multi_factorial_as<Coeff>(alpha));
    }
    return out;
  }

  /// Every table(alpha) is homogeneous of degree |alpha| (or zero).
  bool preserves_degree() const {
    for (const auto& [alpha, p] : table_) {
      const auto h = is_homogeneous(p);
      if (!h) return false;
      if (!h.any_degree() && h.degree() != total_degree(alpha)) return false;
    }
    return true;
  }

  friend bool operator==(const OperatorBox&, const OperatorBox&) = default;

 private:
  ExpVec kappa_;
  std::size_t n_out_;
  table_type table_;
};

using ExactOperatorBox = OperatorBox<Rat>;
using FloatOperatorBox = OperatorBox<double>;

/// I_S(x^[alpha]) = sum over matched beta of y^[beta].
inline Poly induced_image(const SubsetSeq& s, const ExpVec& alpha) {
  Poly out(static_cast<std::size_t>(s.num_parts()));
  for (const ExpVec& beta : matched_degrees(s, alpha)) {
    out.add_term(beta, Rat(1) / Rat(multi_factorial(beta)));
  }
  return out;
}

/// The inducing operator, extended linearly over the normalized basis.
inline Poly apply_inducing(const SubsetSeq& s, const Poly& f) {
  detail::require_arity(f.nvars(), static_cast<std::size_t>(s.ground_size()), "apply_inducing input");
  Poly out(static_cast<std::size_t>(s.num_parts()));
  for (const auto& [alpha, c] : f.terms()) {
    out += induced_image(s, alpha) * (c * Rat(multi_factorial(alpha)));
  }
  return out;
}

/// 0/1 matrix with A(i, j) = 1 iff i is in S_j.
inline RatMatrix incidence_matrix(const SubsetSeq& s) {
  RatMatrix a(static_cast<std::size_t>(s.ground_size()), static_cast<std::size_t>(s.num_parts()));
  for (const Edge& e : s.edges()) a(static_cast<std::size_t>(e.element), static_cast<std::size_t>(e.part)) = 1;
  return a;
}

namespace detail {

inline void check_pattern(const SubsetSeq& s, const RatMatrix& a) {
  if (a.rows() != static_cast<std::size_t>(s.ground_size()) ||
      a.cols() != static_cast<std::size_t>(s.num_parts())) {
    throw ArityError("substitution matrix must be " + std::to_string(s.ground_size()) + "x" +
                     std::to_string(s.num_parts()));
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) < 0) throw DomainError("substitution matrix has a negative entry");
      const bool edge = s.contains(static_cast<int>(j), static_cast<int>(i));
      if (edge != (a(i, j) != 0)) {
        throw DomainError("substitution matrix pattern differs from the sequence at (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
}

inline std::vector<Poly> substitution_images(const SubsetSeq& s, const std::optional<RatMatrix>& a) {
  const RatMatrix m = a ? *a : incidence_matrix(s);
  check_pattern(s, m);
  std::vector<Poly> images;
  const auto n = static_cast<std::size_t>(s.num_parts());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Poly row(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != 0) row += Poly::variable(n, j) * m(i, j);
    }
    images.push_back(std::move(row));
  }
  return images;
}

}  // namespace detail

/// f(A y); A defaults to the incidence matrix of S.
inline Poly apply_substitution(const SubsetSeq& s, const std::optional<RatMatrix>& a, const Poly& f) {
  detail::require_arity(f.nvars(), static_cast<std::size_t>(s.ground_size()), "apply_substitution input");
  return compose(f, detail::substitution_images(s, a));
}

inline ExactOperatorBox inducing_box(const SubsetSeq& s, const ExpVec& kappa) {
  detail::require_arity(kappa.size(), static_cast<std::size_t>(s.ground_size()), "kappa");
  return ExactOperatorBox::build(kappa, static_cast<std::size_t>(s.num_parts()),
                                 [&](const ExpVec& alpha) { return induced_image(s, alpha); });
}

inline ExactOperatorBox substitution_box(const SubsetSeq& s, const ExpVec& kappa,
                                         const std::optional<RatMatrix>& a = std::nullopt) {
  detail::require_arity(kappa.size(), static_cast<std::size_t>(s.ground_size()), "kappa");
  const auto images = detail::substitution_images(s, a);
  return ExactOperatorBox::build(kappa, static_cast<std::size_t>(s.num_parts()), [&](const ExpVec& alpha) {
    return compose(Poly::normalized_monomial(alpha), images);
  });
}

/// sym_T(y, u) = kappa! * sum_alpha T(x^[alpha]) u^[kappa - alpha], in
/// variables (y_1..y_n, u_1..u_m).
template <class Coeff>
Polynomial<Coeff> symbol_of(const OperatorBox<Coeff>& t) {
  const std::size_t n = t.n_out();
  const std::size_t m = t.n_in();
  const Coeff kappa_fact = multi_factorial_as<Coeff>(t.kappa());
  Polynomial<Coeff> sym(n + m);
  ExpVec e(n + m, 0);
  for (const auto& [alpha, image] : t.table()) {
    ExpVec rest(m);
    for (std::size_t i = 0; i < m; ++i) rest[i] = t.kappa()[i] - alpha[i];
    const Coeff weight = kappa_fact / multi_factorial_as<Coeff>(rest);
    for (const auto& [beta, c] : image.terms()) {
      std::copy(beta.begin(), beta.end(), e.begin());
      std::copy(rest.begin(), rest.end(), e.begin() + static_cast<std::ptrdiff_t>(n));
      sym.add_term(e, c * weight);
    }
  }
  return sym;
}

/// Inverse of symbol_of: table(alpha) = (kappa - alpha)!/kappa! times the
/// coefficient polynomial of u^(kappa - alpha).
template <class Coeff>
OperatorBox<Coeff> box_from_symbol(const Polynomial<Coeff>& sym, const ExpVec& kappa, std::size_t n_out) {
  const std::size_t m = kappa.size();
  detail::require_arity(sym.nvars(), n_out + m, "symbol variable count");
  typename OperatorBox<Coeff>::table_type table;
  for_each_in_box(kappa, [&](const ExpVec& alpha) { table.emplace(alpha, Polynomial<Coeff>(n_out)); });
  const Coeff kappa_fact = multi_factorial_as<Coeff>(kappa);
  for (const auto& [e, c] : sym.terms()) {
    ExpVec beta(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n_out));
    ExpVec rest(e.begin() + static_cast<std::ptrdiff_t>(n_out), e.end());
    ExpVec alpha(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (rest[i] > kappa[i]) {
        throw DomainError("box_from_symbol: u-degree exceeds kappa in variable u" + std::to_string(i + 1));
      }
      alpha[i] = kappa[i] - rest[i];
    }
    table.at(alpha).add_term(beta, c * multi_factorial_as<Coeff>(rest) / kappa_fact);
  }
  return OperatorBox<Coeff>(kappa, n_out, std::move(table));
}

/// T^q: every normalized coefficient c of every table entry becomes c^q.
/// q = 0 turns any operator with the support of I_S into I_S; q = 1 is T.
inline FloatOperatorBox power_box(const ExactOperatorBox& t, const Rat& q) {
  if (q < 0 || q > 1) throw DomainError("power_box: q must lie in [0, 1]");
  const double qd = to_double(q);
  typename FloatOperatorBox::table_type table;
  for (const auto& [alpha, image] : t.table()) {
    FloatPoly out(t.n_out());
    for (const auto& [beta, c] : image.terms()) {
      const Rat normalized = c * Rat(multi_factorial(beta));
      if (normalized < 0) throw DomainError("power_box: operator has a negative coefficient");
      double powered;
      if (q == 0) {
        powered = 1.0;
      } else if (q == 1) {
        powered = to_double(normalized);
      } else {
        powered = std::pow(to_double(normalized), qd);
      }
      out.add_term(beta, powered / multi_factorial_as<double>(beta));
    }
    table.emplace(alpha, std::move(out));
  }
  return FloatOperatorBox(t.kappa(), t.n_out(), std::move(table));
}

/// S followed by one singleton {j} for every element j of every S_i
/// (elements in increasing order within each part).
struct TildeSeq {
  SubsetSeq seq;
  std::vector<int> owner;  // owner[k] = index of the original part the k-th singleton came from
};

inline TildeSeq build_tilde_with_owners(const SubsetSeq& s) {
  std::vector<Subset> parts = s.parts();
  std::vector<int> owner;
  for (int i = 0; i < s.num_parts(); ++i) {
    for (int j : elements_of(s.part(i))) {
      parts.push_back(Subset{1} << j);
      owner.push_back(i);
    }
  }
  return {SubsetSeq(s.ground_size(), std::move(parts)), std::move(owner)};
}

inline SubsetSeq build_tilde(const SubsetSeq& s) { return build_tilde_with_owners(s).seq; }

/// The operator whose symbol is sym_{I_tilde(S)}(a . y, b . y', u), where
/// y' repeats y_i once per element of S_i.
inline ExactOperatorBox t_ab_box(const SubsetSeq& s, const std::vector<Rat>& a, const std::vector<Rat>& b,
                                 const ExpVec& kappa) {
  const auto tilde = build_tilde_with_owners(s);
  const auto n = static_cast<std::size_t>(s.num_parts());
  const std::size_t big_n = tilde.owner.size();
  const std::size_t m = static_cast<std::size_t>(s.ground_size());
  detail::require_arity(a.size(), n, "a");
  detail::require_arity(b.size(), big_n, "b");
  detail::require_arity(kappa.size(), m, "kappa");
  for (const auto& v : a) {
    if (v < 0) throw DomainError("t_ab_box: a must be nonnegative");
  }
  for (const auto& v : b) {
    if (v < 0) throw DomainError("t_ab_box: b must be nonnegative");
  }

  const Poly sym_tilde = symbol_of(inducing_box(tilde.seq, kappa));
  const std::size_t out_vars = n + m;
  std::vector<Poly> images;
  images.reserve(n + big_n + m);
  for (std::size_t i = 0; i < n; ++i) images.push_back(Poly::variable(out_vars, i) * a[i]);
  for (std::size_t k = 0; k < big_n; ++k) {
    images.push_back(Poly::variable(out_vars, static_cast<std::size_t>(tilde.owner[k])) * b[k]);
  }
  for (std::size_t i = 0; i < m; ++i) images.push_back(Poly::variable(out_vars, n + i));
  return box_from_symbol(compose(sym_tilde, images), kappa, n);
}

}  // namespace lorentz
