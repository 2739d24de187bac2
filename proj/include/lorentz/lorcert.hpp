#pragma once

// Lorentzian certification: a homogeneous polynomial of degree d is
// Lorentzian iff its coefficients are nonnegative, its support is M-convex,
// and every (d-2)-th partial derivative is a quadratic form whose Hessian has
// at most one positive eigenvalue. Inertia is computed by congruence
// diagonalization, so no eigenvalues are ever formed.

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/enumerate.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/numpoly.hpp"

namespace lorentz {

struct Inertia {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct MConvexResult {
  bool m_convex = true;
  // alpha, beta and the coordinate i (0-based) for which no exchange exists
  std::optional<std::pair<ExpVec, ExpVec>> violation;
  int coordinate = -1;
};

/// Symmetric exchange, checked over all ordered pairs.
inline MConvexResult is_m_convex(std::vector<ExpVec> points) {
  MConvexResult out;
  if (points.empty()) return out;
  const std::size_t len = points.front().size();
  const int deg = total_degree(points.front());
  for (const auto& p : points) {
    detail::require_arity(p.size(), len, "support vector");
    if (total_degree(p) != deg) throw DomainError("is_m_convex: support vectors have mixed degrees");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::set<ExpVec> lookup(points.begin(), points.end());
  ExpVec moved(len);
  for (const auto& a : points) {
    for (const auto& b : points) {
      for (std::size_t i = 0; i < len; ++i) {
        if (a[i] <= b[i]) continue;
        bool exchanged = false;
        for (std::size_t j = 0; j < len && !exchanged; ++j) {
          if (a[j] >= b[j]) continue;
          moved = a;
          --moved[i];
          ++moved[j];
          exchanged = lookup.count(moved) > 0;
        }
        if (!exchanged) {
          out.m_convex = false;
          out.violation = std::make_pair(a, b);
          out.coordinate = static_cast<int>(i);
          return out;
        }
      }
    }
  }
  return out;
}

/// Hessian of a quadratic form: H_ii = 2 coeff(x_i^2), H_ij = coeff(x_i x_j).
template <class Coeff>
Matrix<Coeff> hessian(const Polynomial<Coeff>& q) {
  const std::size_t n = q.nvars();
  Matrix<Coeff> h(n, n);
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i) {
      for (int k = 0; k < e[i]; ++k) vars.push_back(i);
    }
    if (vars.size() != 2) throw DomainError("hessian: polynomial is not a quadratic form");
    if (vars[0] == vars[1]) {
      h(vars[0], vars[0]) += c * Coeff{2};
    } else {
      h(vars[0], vars[1]) += c;
      h(vars[1], vars[0]) += c;
    }
  }
  return h;
}

/// Inertia of a symmetric matrix by symmetric Gaussian elimination. When the
/// remaining diagonal vanishes but some a_ij does not, row/column j is added
/// to row/column i, which makes the (i, i) pivot 2 a_ij. Entries with
/// |x| <= tol count as zero.
template <class Coeff>
Inertia inertia_of(Matrix<Coeff> a, double tol = 0.0) {
  const std::size_t n = a.rows();
  detail::require_arity(a.cols(), n, "inertia: square matrix");
  auto is_zero = [&](const Coeff& x) {
    if constexpr (std::is_same_v<Coeff, Rat>) {
      return x == 0;
    } else {
      return std::abs(x) <= tol;
    }
  };
  auto magnitude = [](const Coeff& x) -> double { return std::abs(to_double(x)); };

  Inertia out;
  std::vector<bool> active(n, true);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::optional<std::size_t> pivot;
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || is_zero(a(k, k))) continue;
      if constexpr (std::is_same_v<Coeff, Rat>) {
        pivot = k;
        break;
      } else {
        if (!pivot || magnitude(a(k, k)) > magnitude(a(*pivot, *pivot))) pivot = k;
      }
    }
    if (!pivot) {
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = 0; i < n && !off; ++i) {
        if (!active[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (active[j] && !is_zero(a(i, j))) {
            off = std::make_pair(i, j);
            break;
          }
        }
      }
      if (!off) {
        out.n_zero += static_cast<int>(remaining);
        break;
      }
      const auto [i, j] = *off;
      for (std::size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
      for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
      pivot = i;
      if (is_zero(a(i, i))) {
        // only reachable in floating point when cancellation hits the tolerance
        out.n_zero += static_cast<int>(remaining);
        break;
      }
    }
    const std::size_t k = *pivot;
    const Coeff d = a(k, k);
    if (d > Coeff{0}) ++out.n_pos;
    else ++out.n_neg;
    active[k] = false;
    --remaining;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || a(i, k) == Coeff{0}) continue;
      const Coeff factor = a(i, k) / d;
      for (std::size_t j = 0; j < n; ++j) {
        if (active[j]) a(i, j) -= factor * a(k, j);
      }
    }
  }
  return out;
}

/// Inertia of the Hessian of a quadratic form. tol applies to the floating path only.
template <class Coeff>
Inertia quad_inertia(const Polynomial<Coeff>& q, std::optional<double> tol = std::nullopt) {
  const auto h = is_homogeneous(q);
  if (!h || (!h.any_degree() && h.degree() != 2)) {
    throw DomainError("quad_inertia: input is not a quadratic form");
  }
  return inertia_of(hessian(q), tol.value_or(0.0));
}

struct LorentzFailure {
  enum class Kind { kNonHomogeneous, kNegativeCoefficient, kSupportNotMConvex, kBadInertia };
  Kind kind;
  ExpVec gamma;   // derivative multi-index, for kBadInertia
  ExpVec first;   // offending exponent (negative coefficient) or exchange pair
  ExpVec second;
  Inertia inertia;
};

inline std::string kind_name(LorentzFailure::Kind k) {
  switch (k) {
    case LorentzFailure::Kind::kNonHomogeneous: return "non-homogeneous";
    case LorentzFailure::Kind::kNegativeCoefficient: return "negative-coefficient";
    case LorentzFailure::Kind::kSupportNotMConvex: return "support-not-M-convex";
    case LorentzFailure::Kind::kBadInertia: return "bad-inertia";
  }
  return "unknown";
}

struct LorentzReport {
  bool lorentzian = true;
  std::vector<LorentzFailure> failures;  // at most one per kind, in check order
  std::size_t checked_derivatives = 0;

  const LorentzFailure* failure() const { return failures.empty() ? nullptr : &failures.front(); }
  bool has_failure(LorentzFailure::Kind k) const {
    return std::any_of(failures.begin(), failures.end(), [k](const auto& f) { return f.kind == k; });
  }
};

/// Exact unless tol is given. With tol, coefficients of magnitude <= tol are
/// dropped from the support and pivots of magnitude <= tol count as zero.
template <class Coeff>
LorentzReport certify_lorentzian(const Polynomial<Coeff>& input, std::optional<double> tol = std::nullopt) {
  using Kind = LorentzFailure::Kind;
  LorentzReport report;
  auto fail = [&](LorentzFailure f) {
    report.lorentzian = false;
    report.failures.push_back(std::move(f));
  };

  Polynomial<Coeff> f(input.nvars());
  for (const auto& [e, c] : input.terms()) {
    if (tol && std::abs(to_double(c)) <= *tol) continue;
    f.add_term(e, c);
  }
  if (f.is_zero()) return report;

  const auto h = is_homogeneous(f);
  if (!h) {
    fail({Kind::kNonHomogeneous, {}, {}, {}, {}});
    return report;
  }
  for (const auto& [e, c] : f.terms()) {
    if (c < Coeff{0}) {
      fail({Kind::kNegativeCoefficient, {}, e, {}, {}});
      break;
    }
  }
  const auto mc = is_m_convex(f.support());
  if (!mc.m_convex) fail({Kind::kSupportNotMConvex, {}, mc.violation->first, mc.violation->second, {}});

  const int d = h.degree();
  if (d < 2) return report;

  ExpVec profile(f.nvars(), 0);
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) profile[i] = std::max(profile[i], e[i]);
  }
  bool inertia_failed = false;
  for_each_bounded_composition(d - 2, profile, [&](const ExpVec& gamma) {
    if (inertia_failed) return;
    const auto q = derivative(f, gamma);
    if (q.is_zero()) return;
    ++report.checked_derivatives;
    const Inertia in = inertia_of(hessian(q), tol.value_or(0.0));
    if (in.n_pos > 1) {
      inertia_failed = true;
      fail({Kind::kBadInertia, gamma, {}, {}, in});
    }
  });
  return report;
}

}  // namespace lorentz
