#pragma once

// Sparse multivariate polynomials over an exact (Rat) or floating (double)
// coefficient type. Coefficients live in the plain monomial basis; the
// normalized basis x^[a] = x^a / a! is exposed through accessors.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/enumerate.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/subset.hpp"

namespace lorentz {

/// Graded lexicographic order, largest monomial first.
struct GradedLexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return b < a;
  }
};

template <class Coeff>
Coeff factorial_as(int n) {
  if constexpr (std::is_same_v<Coeff, Rat>) {
    return Rat(factorial(n));
  } else {
    Coeff out{1};
    for (int k = 2; k <= n; ++k) out *= static_cast<Coeff>(k);
    return out;
  }
}

template <class Coeff>
Coeff multi_factorial_as(const ExpVec& alpha) {
  Coeff out{1};
  for (int a : alpha) out *= factorial_as<Coeff>(a);
  return out;
}

template <class Coeff>
class Polynomial {
 public:
  using coeff_type = Coeff;
  using term_map = std::map<ExpVec, Coeff, GradedLexGreater>;

  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0) throw ArityError("polynomial needs at least one variable");
  }

  static Polynomial constant(std::size_t nvars, const Coeff& c) {
    Polynomial p(nvars);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
  }

  static Polynomial monomial(const ExpVec& exponent, const Coeff& c = Coeff{1}) {
    Polynomial p(exponent.size());
    p.add_term(exponent, c);
    return p;
  }

  /// c * x^[exponent], i.e. c * x^exponent / exponent!.
  static Polynomial normalized_monomial(const ExpVec& exponent, const Coeff& c = Coeff{1}) {
    return monomial(exponent, c / multi_factorial_as<Coeff>(exponent));
  }

  /// The single variable x_i (0-based).
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw ArityError("variable index out of range");
    ExpVec e(nvars, 0);
    e[i] = 1;
    return monomial(e);
  }

  std::size_t nvars() const { return nvars_; }
  const term_map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Plain coefficient of x^exponent; zero when absent.
  Coeff coeff(const ExpVec& exponent) const {
    detail::require_arity(exponent.size(), nvars_, "coeff");
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Coeff{0} : it->second;
  }

  void add_term(const ExpVec& exponent, const Coeff& c) {
    detail::require_arity(exponent.size(), nvars_, "add_term");
    for (int e : exponent) {
      if (e < 0) throw DomainError("negative exponent");
    }
    if (c == Coeff{0}) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff{0}) terms_.erase(it);
    }
  }

  /// Largest total degree of a stored term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  std::vector<ExpVec> support() const {
    std::vector<ExpVec> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    detail::require_arity(o.nvars_, nvars_, "polynomial add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    detail::require_arity(o.nvars_, nvars_, "polynomial subtract");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    if (s == Coeff{0}) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Coeff{-1}; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    detail::require_arity(b.nvars_, a.nvars_, "polynomial multiply");
    Polynomial out(a.nvars_);
    ExpVec e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  term_map terms_;
};

using Poly = Polynomial<Rat>;
using FloatPoly = Polynomial<double>;

template <class Coeff>
Polynomial<Coeff> scale(Polynomial<Coeff> f, const Coeff& c) {
  return f *= c;
}

template <class Coeff>
Polynomial<Coeff> pow(const Polynomial<Coeff>& base, int k) {
  if (k < 0) throw DomainError("negative polynomial power");
  auto out = Polynomial<Coeff>::constant(base.nvars(), Coeff{1});
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

/// alpha! times the plain coefficient of x^alpha.
template <class Coeff>
Coeff normalized_coeff(const Polynomial<Coeff>& f, const ExpVec& alpha) {
  detail::require_arity(alpha.size(), f.nvars(), "normalized_coeff");
  return f.coeff(alpha) * multi_factorial_as<Coeff>(alpha);
}

/// Terms whose exponent vectors are 0/1-valued.
template <class Coeff>
Polynomial<Coeff> multiaffine_part(const Polynomial<Coeff>& f) {
  Polynomial<Coeff> out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (std::all_of(e.begin(), e.end(), [](int x) { return x <= 1; })) out.add_term(e, c);
  }
  return out;
}

/// Sum of x_B over all r-subsets B of [m].
inline Poly elementary_symmetric(int m, int r) {
  if (m < 1) throw DomainError("elementary_symmetric: m must be positive");
  if (r < 0 || r > m) throw DomainError("elementary_symmetric: need 0 <= r <= m");
  Poly out(static_cast<std::size_t>(m));
  for_each_k_subset(m, r, [&](Subset b) {
    ExpVec e(static_cast<std::size_t>(m), 0);
    for (int i : elements_of(b)) e[i] = 1;
    out.add_term(e, Rat(1));
  });
  return out;
}

/// Result of a homogeneity test: the zero polynomial is homogeneous of
/// every degree ("any").
class Homogeneity {
 public:
  enum class Kind { kNotHomogeneous, kAnyDegree, kDegree };

  static Homogeneity none() { return Homogeneity(Kind::kNotHomogeneous, -1); }
  static Homogeneity any() { return Homogeneity(Kind::kAnyDegree, -1); }
  static Homogeneity of_degree(int d) { return Homogeneity(Kind::kDegree, d); }

  Kind kind() const { return kind_; }
  bool homogeneous() const { return kind_ != Kind::kNotHomogeneous; }
  bool any_degree() const { return kind_ == Kind::kAnyDegree; }
  int degree() const { return degree_; }
  explicit operator bool() const { return homogeneous(); }

  friend bool operator==(const Homogeneity&, const Homogeneity&) = default;

 private:
  Homogeneity(Kind k, int d) : kind_(k), degree_(d) {}
  Kind kind_;
  int degree_;
};

template <class Coeff>
Homogeneity is_homogeneous(const Polynomial<Coeff>& f) {
  if (f.is_zero()) return Homogeneity::any();
  const int d = total_degree(f.terms().begin()->first);
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) != d) return Homogeneity::none();
  }
  return Homogeneity::of_degree(d);
}

/// Direct summation of monomial values in double-precision complex arithmetic.
template <class Coeff>
std::complex<double> eval_complex(const Polynomial<Coeff>& f,
                                  const std::vector<std::complex<double>>& point) {
  detail::require_arity(point.size(), f.nvars(), "eval_complex");
  for (const auto& z : point) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("eval_complex: non-finite coordinate");
    }
  }
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, c] : f.terms()) {
    std::complex<double> term{to_double(c), 0.0};
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

/// Exact evaluation at a point with coefficients of the same type.
template <class Coeff>
Coeff evaluate(const Polynomial<Coeff>& f, const std::vector<Coeff>& point) {
  detail::require_arity(point.size(), f.nvars(), "evaluate");
  Coeff sum{0};
  for (const auto& [e, c] : f.terms()) {
    Coeff term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

/// Partial derivative d^gamma f.
template <class Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& f, const ExpVec& gamma) {
  detail::require_arity(gamma.size(), f.nvars(), "derivative");
  Polynomial<Coeff> out(f.nvars());
  ExpVec e(f.nvars());
  for (const auto& [src, c] : f.terms()) {
    Coeff k = c;
    bool vanishes = false;
    for (std::size_t i = 0; i < src.size() && !vanishes; ++i) {
      if (src[i] < gamma[i]) {
        vanishes = true;
        break;
      }
      for (int t = 0; t < gamma[i]; ++t) k *= static_cast<Coeff>(src[i] - t);
      e[i] = src[i] - gamma[i];
    }
    if (!vanishes) out.add_term(e, k);
  }
  return out;
}

template <class Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& f, std::size_t var) {
  ExpVec gamma(f.nvars(), 0);
  if (var >= f.nvars()) throw ArityError("derivative: variable index out of range");
  gamma[var] = 1;
  return derivative(f, gamma);
}

/// f(images[0], ..., images[m-1]); every image must share one variable count.
template <class Coeff>
Polynomial<Coeff> compose(const Polynomial<Coeff>& f, const std::vector<Polynomial<Coeff>>& images) {
  detail::require_arity(images.size(), f.nvars(), "compose");
  if (images.empty()) throw ArityError("compose: no images");
  const std::size_t out_vars = images.front().nvars();
  for (const auto& g : images) detail::require_arity(g.nvars(), out_vars, "compose image");

  std::vector<std::vector<Polynomial<Coeff>>> powers(images.size());
  auto power_of = [&](std::size_t i, int k) -> const Polynomial<Coeff>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial<Coeff>::constant(out_vars, Coeff{1}));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };

  Polynomial<Coeff> out(out_vars);
  for (const auto& [e, c] : f.terms()) {
    auto term = Polynomial<Coeff>::constant(out_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= power_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

/// Embeds f into a larger variable set: old variable i becomes new variable placement[i].
template <class Coeff>
Polynomial<Coeff> relabel(const Polynomial<Coeff>& f, std::size_t new_nvars,
                          const std::vector<std::size_t>& placement) {
  detail::require_arity(placement.size(), f.nvars(), "relabel");
  Polynomial<Coeff> out(new_nvars);
  for (const auto& [e, c] : f.terms()) {
    ExpVec ne(new_nvars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (placement[i] >= new_nvars) throw ArityError("relabel: target out of range");
      ne[placement[i]] += e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

inline FloatPoly to_float(const Poly& f) {
  FloatPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) out.add_term(e, to_double(c));
  return out;
}

namespace detail {
inline std::string coeff_text(const Rat& c) { return lorentz::to_string(c); }
inline std::string coeff_text(double c) {
  std::ostringstream os;
  os.precision(17);
  os << c;
  return os.str();
}
}  // namespace detail

/// Human-readable rendering such as "5*y1*y2 + 3*y2^2". Names default to x1..xn.
template <class Coeff>
std::string to_string(const Polynomial<Coeff>& f, const std::vector<std::string>& names = {}) {
  if (f.is_zero()) return "0";
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "x" + std::to_string(i + 1); };
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::string coeff = detail::coeff_text(c);
    const bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace lorentz
