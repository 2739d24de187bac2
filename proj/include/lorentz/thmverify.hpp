#pragma once

// Randomized desk-scale verification. Each check draws its instances from a
// generator seeded by (config seed, check tag, trial index), so every trial
// is reproducible on its own. Failures are recorded as JSON instances that
// replay_instance() re-runs standalone.

#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lorentz/induceop.hpp"
#include "lorentz/json_io.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/lorcert.hpp"
#include "lorentz/matchflow.hpp"
#include "lorentz/matchstat.hpp"
#include "lorentz/numpoly.hpp"
#include "lorentz/polymat.hpp"

namespace lorentz::verify {

using io::json;

struct TrialConfig {
  std::uint64_t seed = 1;
  int max_m = 5;
  int max_n = 5;
  int max_rank = 3;
  int max_kappa = 2;
  int trials = 100;
  double tolerance = 1e-9;

  void validate() const {
    if (max_m < 1 || max_n < 1 || max_rank < 1 || max_kappa < 1 || trials < 1) {
      throw DomainError("trial config: all bounds must be at least 1");
    }
    if (!(tolerance > 0)) throw DomainError("trial config: tolerance must be positive");
  }
};

struct CheckResult {
  std::string name;
  int trials = 0;
  std::vector<json> failures;
  bool passed() const { return failures.empty(); }
};

inline json result_to_json(const CheckResult& r) {
  return {{"check", r.name}, {"trials", r.trials}, {"passed", r.passed()}, {"failures", r.failures}};
}

/// Failure reason, or nullopt when the instance passes.
using Outcome = std::optional<std::string>;

// --- random instances ------------------------------------------------------

using Rng = std::mt19937_64;

inline Rng trial_rng(std::uint64_t seed, std::uint32_t tag, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), tag,
                    static_cast<std::uint32_t>(trial)};
  return Rng(seq);
}

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline SubsetSeq random_seq(Rng& rng, int m, int n) {
  std::vector<Subset> parts;
  for (int j = 0; j < n; ++j) {
    Subset s = 0;
    for (int i = 0; i < m; ++i) {
      if (uniform_int(rng, 0, 1) == 1) s |= Subset{1} << i;
    }
    parts.push_back(s);
  }
  return SubsetSeq(m, std::move(parts));
}

inline SubsetSeq random_seq_upto(Rng& rng, int max_m, int max_n) {
  const int m = uniform_int(rng, 1, max_m);
  const int n = uniform_int(rng, 1, max_n);
  return random_seq(rng, m, n);
}

inline ExpVec random_kappa(Rng& rng, int m, int max_kappa) {
  ExpVec k(static_cast<std::size_t>(m));
  for (auto& v : k) v = uniform_int(rng, 0, max_kappa);
  return k;
}

/// Random rational realization: `rows` generators with entries in {-2..2}
/// over blocks of dimension 1..max_dim.
inline LinReal random_linreal(Rng& rng, int blocks, int rows, int max_dim) {
  std::vector<int> dims;
  std::size_t width = 0;
  for (int b = 0; b < blocks; ++b) {
    dims.push_back(uniform_int(rng, 1, max_dim));
    width += static_cast<std::size_t>(dims.back());
  }
  RatMatrix gens(static_cast<std::size_t>(rows), width);
  for (std::size_t r = 0; r < gens.rows(); ++r) {
    for (std::size_t c = 0; c < width; ++c) gens(r, c) = uniform_int(rng, -2, 2);
  }
  return LinReal(std::move(dims), std::move(gens));
}

/// Valid polymatroid on `m` elements with full rank <= max_rank, drawn from
/// rational realizations, direct sums of free polymatroids, or inductions.
inline Polymatroid random_polymatroid(Rng& rng, int m, int max_rank) {
  switch (uniform_int(rng, 0, 2)) {
    case 0:
      return linreal_rank(random_linreal(rng, m, uniform_int(rng, 0, max_rank), 2));
    case 1: {
      std::vector<Polymatroid> parts;
      int left = m;
      int rank_left = max_rank;
      while (left > 0) {
        const int size = uniform_int(rng, 1, left);
        const int r = uniform_int(rng, 0, rank_left);
        parts.push_back(free_polymatroid(size, r));
        left -= size;
        rank_left -= r;
      }
      return direct_sum(parts);
    }
    default: {
      const int source = uniform_int(rng, 1, 4);
      const auto base = linreal_rank(random_linreal(rng, source, uniform_int(rng, 0, max_rank), 2));
      return induce_polymatroid(base, random_seq(rng, source, m));
    }
  }
}

// --- single instances --------------------------------------------------------

/// f_{S,r} is Lorentzian and equals the multi-affine part of I_S(e_r).
inline Outcome main1_instance(const SubsetSeq& s, int r) {
  const Poly f = f_poly(s, r);
  const auto report = certify_lorentzian(f);
  if (!report.lorentzian) return "f_{S,r} failed certification: " + io::report_to_json(report).dump();
  const Poly via_operator = multiaffine_part(apply_inducing(s, elementary_symmetric(s.ground_size(), r)));
  if (!(via_operator == f)) return "f_{S,r} differs from the multi-affine part of I_S(e_r)";
  return std::nullopt;
}

/// The polymatroid on edges whose induced base polytope should carry the
/// symbol of I_S: a free polymatroid of rank kappa_i on the edges at each
/// element i, induced along the edge stars of all vertices. An element that
/// lies in no part but has kappa_i > 0 gets one private phantom edge.
struct SymbolPolymatroid {
  Polymatroid on_edges;
  SubsetSeq stars;   // parts: stars of elements 1..m, then of parts 1..n
  Polymatroid induced;
};

inline SymbolPolymatroid symbol_polymatroid(const SubsetSeq& s, const ExpVec& kappa) {
  const int m = s.ground_size();
  const int n = s.num_parts();
  std::vector<Polymatroid> blocks;
  std::vector<Subset> stars(static_cast<std::size_t>(m + n), 0);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    int size = 0;
    for (int j = 0; j < n; ++j) {
      if (!s.contains(j, i)) continue;
      stars[static_cast<std::size_t>(i)] |= Subset{1} << next;
      stars[static_cast<std::size_t>(m + j)] |= Subset{1} << next;
      ++next;
      ++size;
    }
    if (size == 0 && kappa[static_cast<std::size_t>(i)] > 0) {
      stars[static_cast<std::size_t>(i)] |= Subset{1} << next;
      ++next;
      ++size;
    }
    blocks.push_back(free_polymatroid(size, kappa[static_cast<std::size_t>(i)]));
  }
  if (next == 0) {
    // no edges at all: a single loop keeps the ground set nonempty
    blocks.push_back(free_polymatroid(1, 0));
    next = 1;
  }
  auto on_edges = direct_sum(blocks);
  SubsetSeq star_seq(next, std::move(stars));
  auto induced = induce_polymatroid(on_edges, star_seq);
  return {std::move(on_edges), std::move(star_seq), std::move(induced)};
}

/// The symbol of I_S is the exponential generating function of the base
/// lattice points of the induced edge polymatroid, with plain coefficients
/// kappa!/((kappa-alpha)! beta!), and matching <=> base-polytope membership.
inline Outcome symbol_instance(const SubsetSeq& s, const ExpVec& kappa) {
  const auto m = static_cast<std::size_t>(s.ground_size());
  const auto n = static_cast<std::size_t>(s.num_parts());
  const Poly sym = symbol_of(inducing_box(s, kappa));
  const auto poly = symbol_polymatroid(s, kappa);

  // base point (kappa - alpha, beta) <-> symbol exponent (beta, kappa - alpha)
  std::set<ExpVec> from_polytope;
  for (const ExpVec& p : base_points(poly.induced)) {
    ExpVec e(n + m);
    std::copy(p.begin() + static_cast<std::ptrdiff_t>(m), p.end(), e.begin());
    std::copy(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(m), e.begin() + static_cast<std::ptrdiff_t>(n));
    from_polytope.insert(e);
  }
  const auto supp = sym.support();
  if (std::set<ExpVec>(supp.begin(), supp.end()) != from_polytope) {
    return "symbol support differs from the base lattice points of the induced polymatroid";
  }
  const BigInt kappa_fact = multi_factorial(kappa);
  for (const auto& [e, c] : sym.terms()) {
    const ExpVec beta(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
    const ExpVec rest(e.begin() + static_cast<std::ptrdiff_t>(n), e.end());
    if (c != Rat(kappa_fact, multi_factorial(rest) * multi_factorial(beta))) {
      return "symbol coefficient differs from kappa!/((kappa-alpha)! beta!)";
    }
  }
  std::optional<std::string> mismatch;
  for_each_in_box(kappa, [&](const ExpVec& alpha) {
    if (mismatch) return;
    for_each_composition(total_degree(alpha), n, [&](const ExpVec& beta) {
      if (mismatch) return;
      ExpVec point(m + n);
      for (std::size_t i = 0; i < m; ++i) point[i] = kappa[i] - alpha[i];
      std::copy(beta.begin(), beta.end(), point.begin() + static_cast<std::ptrdiff_t>(m));
      if (admits_matching(s, alpha, beta) != in_base_polytope(poly.induced, point)) {
        mismatch = "matching and base-polytope membership disagree at alpha=" + json(alpha).dump() +
                   " beta=" + json(beta).dump();
      }
    });
  });
  return mismatch;
}

inline Outcome hall_rado_instance(const Polymatroid& p, const SubsetSeq& eseq, const ExpVec& delta) {
  const auto r = hall_rado_both(p, eseq, delta);
  if (r.by_rank != r.by_matching) {
    return std::string("rank route says ") + (r.by_rank ? "member" : "non-member") + ", matching route says " +
           (r.by_matching ? "member" : "non-member");
  }
  return std::nullopt;
}

inline const std::vector<Rat>& q_grid() {
  static const std::vector<Rat> grid{Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
  return grid;
}

/// T^q of a substitution operator has a Lorentzian symbol for every q in the
/// grid; T^0 = I_S; T_{1,0} = I_S and T_{0,1} = A_S exactly.
inline Outcome one_param_instance(const SubsetSeq& s, const ExpVec& kappa, const std::optional<RatMatrix>& a,
                                  double tol) {
  const auto sub = substitution_box(s, kappa, a);
  const auto ind = inducing_box(s, kappa);
  const Poly exact_sym = symbol_of(sub);
  if (!certify_lorentzian(exact_sym).lorentzian) return "substitution symbol is not Lorentzian";
  for (const Rat& q : q_grid()) {
    const auto powered = power_box(sub, q);
    const FloatPoly sym = symbol_of(powered);
    const auto report = certify_lorentzian(sym, tol);
    if (!report.lorentzian) {
      return "T^q symbol failed certification at q=" + to_string(q) + ": " + io::report_to_json(report).dump();
    }
    if (q == 0) {
      auto a_supp = sym.support();
      auto b_supp = symbol_of(ind).support();
      std::sort(a_supp.begin(), a_supp.end());
      std::sort(b_supp.begin(), b_supp.end());
      if (a_supp != b_supp) return "T^0 symbol support differs from the symbol of I_S";
      for (const auto& [alpha, image] : powered.table()) {
        if (!(image == to_float(ind.image(alpha)))) return "T^0 differs from I_S at alpha=" + json(alpha).dump();
      }
    }
  }
  const auto n = static_cast<std::size_t>(s.num_parts());
  const std::size_t big_n = build_tilde_with_owners(s).owner.size();
  if (!(t_ab_box(s, std::vector<Rat>(n, 1), std::vector<Rat>(big_n, 0), kappa) == ind)) return "T_{1,0} != I_S";
  if (!(t_ab_box(s, std::vector<Rat>(n, 0), std::vector<Rat>(big_n, 1), kappa) == substitution_box(s, kappa))) {
    return "T_{0,1} != A_S";
  }
  return std::nullopt;
}

/// EGF of a realizable polymatroid's base points, pushed through I_S, has the
/// induced polymatroid as support when S spans full rank, and vanishes
/// otherwise; induction commutes with realization.
inline Outcome property_star_instance(const LinReal& r, const SubsetSeq& s) {
  const Polymatroid p = linreal_rank(r);
  Poly egf(static_cast<std::size_t>(p.ground_size()));
  for (const ExpVec& alpha : base_points(p)) egf += Poly::normalized_monomial(alpha);
  auto supp = apply_inducing(s, egf).support();
  std::sort(supp.begin(), supp.end());
  const Polymatroid induced = induce_polymatroid(p, s);
  if (induced.full_rank() == p.full_rank()) {
    if (supp != base_points(induced)) return "supp(I_S(f)) differs from the induced base lattice points";
  } else if (!supp.empty()) {
    return "I_S(f) is nonzero although S does not span full rank";
  }
  if (!(linreal_rank(linreal_induce(r, s)) == induced)) return "realization of the induced polymatroid has the wrong rank";
  return std::nullopt;
}

/// Matroid-restricted statistic of a realizable matroid is Lorentzian.
inline Outcome matroid_instance(const LinReal& r, const SubsetSeq& s) {
  const Matroid m(linreal_rank(r));
  const auto report = certify_lorentzian(f_poly_matroid(m, s));
  if (!report.lorentzian) return "C_T(M,S) polynomial failed certification: " + io::report_to_json(report).dump();
  const auto uni = uniform_matroid(s.ground_size(), m.full_rank());
  bool ok = true;
  for_each_k_subset(s.num_parts(), static_cast<int>(m.full_rank()), [&](Subset t) {
    if (c_t_matroid(uni, s, t) != c_t(s, t)) ok = false;
  });
  if (!ok) return "uniform-matroid statistic differs from C_T(S)";
  return std::nullopt;
}

// --- checks ------------------------------------------------------------------

namespace detail {

enum Tag : std::uint32_t {
  kMain1 = 1,
  kSymbol = 2,
  kHallRado = 3,
  kOneParam = 4,
  kPropertyStar = 5,
  kMatroid = 6,
};

inline void record(CheckResult& out, const Outcome& o, json instance) {
  if (!o) return;
  instance["reason"] = *o;
  out.failures.push_back(std::move(instance));
}

inline std::optional<RatMatrix> random_pattern_matrix(Rng& rng, const SubsetSeq& s) {
  RatMatrix a = incidence_matrix(s);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) a(i, j) = Rat(uniform_int(rng, 1, 5), uniform_int(rng, 1, 3));
    }
  }
  return a;
}

// Adds every uncovered element to a random part.
inline SubsetSeq covering(Rng& rng, const SubsetSeq& s) {
  std::vector<Subset> parts;
  for (int j = 0; j < s.num_parts(); ++j) parts.push_back(s.part(j));
  const Subset missing = full_subset(s.ground_size()) & ~s.union_of(full_subset(s.num_parts()));
  for (int i : elements_of(missing)) parts[static_cast<std::size_t>(uniform_int(rng, 0, s.num_parts() - 1))] |= Subset{1} << i;
  return SubsetSeq(s.ground_size(), std::move(parts));
}

inline json matrix_to_json(const RatMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace detail

inline CheckResult check_thm_main1(const TrialConfig& cfg) {
  cfg.validate();
  CheckResult out{"thm_main1", 0, {}};
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg.seed, detail::kMain1, t);
    const auto s = random_seq_upto(rng, cfg.max_m, cfg.max_n);
    for (int r = 0; r <= s.ground_size(); ++r) {
      detail::record(out, main1_instance(s, r), {{"check", "thm_main1"}, {"sets", io::seq_to_json(s)}, {"r", r}});
    }
    ++out.trials;
  }
  return out;
}

inline CheckResult check_thm_symbol(const TrialConfig& cfg) {
  cfg.validate();
  CheckResult out{"thm_symbol", 0, {}};
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg.seed, detail::kSymbol, t);
    const auto s = random_seq_upto(rng, std::min(cfg.max_m, 3), std::min(cfg.max_n, 3));
    const auto kappa = random_kappa(rng, s.ground_size(), cfg.max_kappa);
    detail::record(out, symbol_instance(s, kappa),
                   {{"check", "thm_symbol"}, {"sets", io::seq_to_json(s)}, {"kappa", kappa}});
    ++out.trials;
  }
  return out;
}

inline CheckResult check_prop_hall_rado(const TrialConfig& cfg) {
  cfg.validate();
  CheckResult out{"prop_hall_rado", 0, {}};
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg.seed, detail::kHallRado, t);
    const int e = uniform_int(rng, 1, std::min(cfg.max_m, 5));
    const auto p = random_polymatroid(rng, e, cfg.max_rank);
    const auto eseq = random_seq(rng, e, uniform_int(rng, 1, std::min(cfg.max_n, 4)));
    ExpVec delta(static_cast<std::size_t>(eseq.num_parts()));
    const auto members = base_points(induce_polymatroid(p, eseq));
    if (uniform_int(rng, 0, 1) == 0 && !members.empty()) {
      delta = members[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(members.size()) - 1))];
    } else {
      for (auto& v : delta) v = uniform_int(rng, 0, 3);
    }
    detail::record(out, hall_rado_instance(p, eseq, delta),
                   {{"check", "prop_hall_rado"},
                    {"polymatroid", io::polymatroid_to_json(p)},
                    {"sets", io::seq_to_json(eseq)},
                    {"delta", delta}});
    ++out.trials;
  }
  return out;
}

inline CheckResult check_prop_1param(const TrialConfig& cfg) {
  cfg.validate();
  CheckResult out{"prop_1param", 0, {}};
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg.seed, detail::kOneParam, t);
    const auto s = random_seq_upto(rng, std::min(cfg.max_m, 3), std::min(cfg.max_n, 3));
    const auto kappa = random_kappa(rng, s.ground_size(), cfg.max_kappa);
    std::optional<RatMatrix> a;
    if (t % 2 == 1) a = detail::random_pattern_matrix(rng, s);
    json instance = {{"check", "prop_1param"}, {"sets", io::seq_to_json(s)}, {"kappa", kappa},
                     {"tolerance", cfg.tolerance}};
    if (a) instance["matrix"] = detail::matrix_to_json(*a);
    detail::record(out, one_param_instance(s, kappa, a, cfg.tolerance), std::move(instance));
    ++out.trials;
  }
  return out;
}

inline CheckResult check_property_star(const TrialConfig& cfg) {
  cfg.validate();
  CheckResult out{"property_star", 0, {}};
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg.seed, detail::kPropertyStar, t);
    const int m = uniform_int(rng, 1, std::min(cfg.max_m, 4));
    const auto r = random_linreal(rng, m, uniform_int(rng, 0, cfg.max_rank), 2);
    auto s = random_seq(rng, m, uniform_int(rng, 1, std::min(cfg.max_n, 4)));
    if (uniform_int(rng, 0, 3) > 0) s = detail::covering(rng, s);
    detail::record(out, property_star_instance(r, s),
                   {{"check", "property_star"}, {"linreal", io::linreal_to_json(r)}, {"sets", io::seq_to_json(s)}});
    ++out.trials;
  }
  return out;
}

inline CheckResult check_remark_matroid(const TrialConfig& cfg) {
  cfg.validate();
  CheckResult out{"remark_matroid", 0, {}};
  for (int t = 0; t < cfg.trials; ++t) {
    auto rng = trial_rng(cfg.seed, detail::kMatroid, t);
    const int m = uniform_int(rng, 1, std::min(cfg.max_m, 5));
    const auto r = random_linreal(rng, m, uniform_int(rng, 0, std::min(cfg.max_rank, m)), 1);
    const auto s = random_seq(rng, m, uniform_int(rng, 1, std::min(cfg.max_n, 5)));
    detail::record(out, matroid_instance(r, s),
                   {{"check", "remark_matroid"}, {"linreal", io::linreal_to_json(r)}, {"sets", io::seq_to_json(s)}});
    ++out.trials;
  }
  return out;
}

// --- worked examples ---------------------------------------------------------

/// Point where I_S(x1 x2 x3) vanishes for S = (123, 123, 12), all coordinates
/// in the open upper half-plane.
inline std::vector<std::complex<double>> nonstability_witness() {
  using std::numbers::pi;
  const std::complex<double> y3 = std::polar(1.0, pi / 12.0);
  const std::complex<double> y12 = 0.5 * (std::polar(1.0, 3.0 * pi / 4.0) - y3);
  return {y12, y12, y3};
}

namespace detail {

inline Poly poly_from_terms(std::size_t nvars, const std::vector<std::pair<ExpVec, Rat>>& terms) {
  Poly out(nvars);
  for (const auto& [e, c] : terms) out.add_term(e, c);
  return out;
}

}  // namespace detail

/// Each named golden equality from the worked examples; empty on success.
inline std::vector<std::pair<std::string, Outcome>> example_outcomes(double tol = 1e-9) {
  std::vector<std::pair<std::string, Outcome>> out;
  auto expect = [&](const std::string& name, bool ok, const std::string& why) {
    out.emplace_back(name, ok ? Outcome{} : Outcome{why});
  };

  {
    const auto s = SubsetSeq::from_lists(4, {{1, 2, 3, 4}, {2, 3}, {3, 4}});
    Poly want(3);
    want += Poly::normalized_monomial({2, 0, 0}, 6);
    want += Poly::normalized_monomial({0, 2, 0});
    want += Poly::normalized_monomial({0, 0, 2});
    want += detail::poly_from_terms(3, {{{1, 1, 0}, 5}, {{1, 0, 1}, 5}, {{0, 1, 1}, 3}});
    expect("worked_example_inducing", apply_inducing(s, elementary_symmetric(4, 2)) == want,
           "I_S(e_2) differs from the worked example");
    const auto table = stat_table(s, 2);
    const std::vector<std::pair<Subset, long>> rows{{0b011, 5}, {0b101, 5}, {0b110, 3}};
    expect("worked_example_ct", table.rows == rows, "C_T table differs from {12:5, 13:5, 23:3}");
  }
  {
    const auto s = SubsetSeq::from_lists(2, {{1}, {2}, {1, 2}});
    const Poly x1x2 = Poly::monomial({1, 1});
    const Poly want_i = detail::poly_from_terms(3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}, {{0, 0, 2}, Rat(1, 2)}});
    const Poly want_a = detail::poly_from_terms(3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}, {{0, 0, 2}, 1}});
    const Poly got_i = apply_inducing(s, x1x2);
    expect("three_subset_inducing", got_i == want_i, "I_S(x1 x2) differs");
    expect("three_subset_substitution", apply_substitution(s, std::nullopt, x1x2) == want_a, "A_S(x1 x2) differs");
    expect("three_subset_product_identity_fails_for_inducing",
           got_i.coeff({1, 1, 0}) * got_i.coeff({0, 0, 2}) != got_i.coeff({1, 0, 1}) * got_i.coeff({0, 1, 1}),
           "I_S(x1 x2) unexpectedly satisfies the product identity");
  }
  {
    const auto s = SubsetSeq::from_lists(3, {{1, 2, 3}, {1, 2, 3}, {1, 2}});
    const Poly lin = detail::poly_from_terms(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
    const Poly want = (pow(lin, 3) - Poly::monomial({0, 0, 3})) * Rat(1, 6);
    const Poly got = apply_inducing(s, Poly::monomial({1, 1, 1}));
    expect("nonstable_inducing", got == want, "I_S(x1 x2 x3) differs from ((y1+y2+y3)^3 - y3^3)/6");
    expect("nonstable_lorentzian", certify_lorentzian(got).lorentzian, "I_S(x1 x2 x3) is not certified Lorentzian");
    const auto point = nonstability_witness();
    bool upper = true;
    for (const auto& z : point) upper = upper && z.imag() > 0;
    expect("nonstable_witness", std::abs(eval_complex(got, point)) <= tol && upper,
           "witness point is not a root in the upper half-plane");
  }
  {
    const auto s1 = SubsetSeq::from_lists(2, {{1}, {1}, {2}, {2}});
    const auto s2 = SubsetSeq::from_lists(4, {{1, 3}, {2, 4}});
    const Poly x1x2 = Poly::monomial({1, 1});
    Poly composed_want(2);
    composed_want += Poly::monomial({1, 1});
    composed_want += Poly::normalized_monomial({2, 0});
    composed_want += Poly::normalized_monomial({0, 2});
    Poly chained_want = composed_want + Poly::monomial({1, 1});
    expect("composition_of_graphs", apply_inducing(compose_seq(s1, s2), x1x2) == composed_want,
           "I_{S2 o S1}(x1 x2) differs");
    expect("composition_of_operators", apply_inducing(s2, apply_inducing(s1, x1x2)) == chained_want,
           "(I_S2 o I_S1)(x1 x2) differs");
  }
  return out;
}

inline CheckResult check_examples(const TrialConfig& cfg) {
  cfg.validate();
  CheckResult out{"examples", 0, {}};
  for (const auto& [name, outcome] : example_outcomes(cfg.tolerance)) {
    ++out.trials;
    if (outcome) out.failures.push_back({{"check", "examples"}, {"example", name}, {"reason", *outcome}});
  }
  return out;
}

// --- registry ----------------------------------------------------------------

struct NamedCheck {
  std::string name;
  std::function<CheckResult(const TrialConfig&)> run;
};

inline const std::vector<NamedCheck>& all_checks() {
  static const std::vector<NamedCheck> checks{
      {"examples", check_examples},
      {"thm_main1", check_thm_main1},
      {"thm_symbol", check_thm_symbol},
      {"prop_hall_rado", check_prop_hall_rado},
      {"prop_1param", check_prop_1param},
      {"property_star", check_property_star},
      {"remark_matroid", check_remark_matroid},
  };
  return checks;
}

/// Re-runs one serialized failure record (or any instance of the same shape).
inline Outcome replay_instance(const json& j) {
  const std::string check = j.at("check").get<std::string>();
  if (check == "thm_main1") return main1_instance(io::seq_from_json(j.at("sets")), j.at("r").get<int>());
  if (check == "thm_symbol") {
    return symbol_instance(io::seq_from_json(j.at("sets")), j.at("kappa").get<ExpVec>());
  }
  if (check == "prop_hall_rado") {
    return hall_rado_instance(io::polymatroid_from_json(j.at("polymatroid")), io::seq_from_json(j.at("sets")),
                              j.at("delta").get<ExpVec>());
  }
  if (check == "prop_1param") {
    std::optional<RatMatrix> a;
    if (j.contains("matrix")) a = io::matrix_from_json(j.at("matrix"));
    return one_param_instance(io::seq_from_json(j.at("sets")), j.at("kappa").get<ExpVec>(), a,
                              j.value("tolerance", 1e-9));
  }
  if (check == "property_star") {
    return property_star_instance(io::linreal_from_json(j.at("linreal")), io::seq_from_json(j.at("sets")));
  }
  if (check == "remark_matroid") {
    return matroid_instance(io::linreal_from_json(j.at("linreal")), io::seq_from_json(j.at("sets")));
  }
  if (check == "examples") {
    const std::string name = j.at("example").get<std::string>();
    for (const auto& [n, o] : example_outcomes()) {
      if (n == name) return o;
    }
    throw ParseError("unknown example '" + name + "'");
  }
  throw ParseError("unknown check '" + check + "'");
}

}  // namespace lorentz::verify
