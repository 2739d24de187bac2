#pragma once

// JSON encodings for the domain types. Integers inside polynomial
// coefficients travel as decimal strings so that precision is never lost;
// element and part indices are 1-based on the wire.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/induceop.hpp"
#include "lorentz/linalg.hpp"
#include "lorentz/lorcert.hpp"
#include "lorentz/matchflow.hpp"
#include "lorentz/matchstat.hpp"
#include "lorentz/numpoly.hpp"
#include "lorentz/polymat.hpp"

namespace lorentz::io {

using nlohmann::json;

/// Parses text, reporting the byte offset of a syntax error.
inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

namespace detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

inline const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, std::string("missing field '") + key + "'");
  return *it;
}

inline long as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<long>();
}

inline std::string as_int_text(const json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  schema_error(path, "expected a decimal integer string");
}

inline Rat as_rat(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
  } catch (const ParseError& e) {
    schema_error(path, e.what());
  }
  schema_error(path, "expected a rational (integer or \"p/q\" string)");
}

inline ExpVec as_expvec(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of integers");
  ExpVec out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const long v = as_int(j[i], path + "[" + std::to_string(i) + "]");
    if (v < 0) schema_error(path + "[" + std::to_string(i) + "]", "expected a nonnegative integer");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

inline std::string edge_key(const Edge& e) {
  return std::to_string(e.element + 1) + "-" + std::to_string(e.part + 1);
}

inline Edge parse_edge_key(const std::string& key, const std::string& path) {
  const auto dash = key.find('-');
  if (dash == std::string::npos) schema_error(path, "edge key must look like \"i-j\"");
  try {
    const int i = std::stoi(key.substr(0, dash));
    const int j = std::stoi(key.substr(dash + 1));
    return {i - 1, j - 1};
  } catch (const std::exception&) {
    schema_error(path, "edge key must look like \"i-j\"");
  }
}

}  // namespace detail

inline json to_json(const ExpVec& e) { return json(e); }

inline json subset_to_json(Subset s) {
  json out = json::array();
  for (int e : elements_of(s)) out.push_back(e + 1);
  return out;
}

// --- polynomials -----------------------------------------------------------

/// Canonical form: plain basis, terms in graded lexicographic order.
inline json poly_to_json(const Poly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({{"exp", e}, {"num", numerator_of(c).str()}, {"den", denominator_of(c).str()}});
  }
  return {{"nvars", f.nvars()}, {"basis", "plain"}, {"terms", terms}};
}

/// Same shape with "value" holding a binary float.
inline json poly_to_json(const FloatPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"value", c}});
  return {{"nvars", f.nvars()}, {"basis", "plain"}, {"terms", terms}};
}

inline Poly poly_from_json(const json& j, const std::string& path = "poly") {
  const long nvars = detail::as_int(detail::field(j, path, "nvars"), path + ".nvars");
  if (nvars < 1) detail::schema_error(path + ".nvars", "must be positive");
  std::string basis = "plain";
  if (j.contains("basis")) {
    const auto& b = j["basis"];
    if (!b.is_string()) detail::schema_error(path + ".basis", "expected a string");
    basis = b.get<std::string>();
    if (basis != "plain" && basis != "normalized") {
      detail::schema_error(path + ".basis", "must be \"plain\" or \"normalized\"");
    }
  }
  const auto& terms = detail::field(j, path, "terms");
  if (!terms.is_array()) detail::schema_error(path + ".terms", "expected an array");
  Poly out(static_cast<std::size_t>(nvars));
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string tp = path + ".terms[" + std::to_string(k) + "]";
    const ExpVec e = detail::as_expvec(detail::field(terms[k], tp, "exp"), tp + ".exp");
    if (e.size() != static_cast<std::size_t>(nvars)) {
      detail::schema_error(tp + ".exp", "length differs from nvars");
    }
    BigInt num;
    BigInt den = 1;
    try {
      num = parse_bigint(detail::as_int_text(detail::field(terms[k], tp, "num"), tp + ".num"));
      if (terms[k].contains("den")) den = parse_bigint(detail::as_int_text(terms[k]["den"], tp + ".den"));
    } catch (const ParseError& err) {
      detail::schema_error(tp, err.what());
    }
    if (den <= 0) detail::schema_error(tp + ".den", "must be a positive integer");
    Rat c(num, den);
    if (basis == "normalized") c /= Rat(multi_factorial(e));
    out.add_term(e, c);
  }
  return out;
}

// --- subset sequences, caps, witnesses ------------------------------------

inline json seq_to_json(const SubsetSeq& s) {
  json sets = json::array();
  for (Subset p : s.parts()) sets.push_back(subset_to_json(p));
  return {{"m", s.ground_size()}, {"sets", sets}};
}

inline SubsetSeq seq_from_json(const json& j, const std::string& path = "sets") {
  const long m = detail::as_int(detail::field(j, path, "m"), path + ".m");
  const auto& sets = detail::field(j, path, "sets");
  if (!sets.is_array()) detail::schema_error(path + ".sets", "expected an array of arrays");
  std::vector<std::vector<int>> lists;
  for (std::size_t p = 0; p < sets.size(); ++p) {
    const std::string pp = path + ".sets[" + std::to_string(p) + "]";
    if (!sets[p].is_array()) detail::schema_error(pp, "expected an array of element indices");
    std::vector<int> elems;
    for (std::size_t k = 0; k < sets[p].size(); ++k) {
      const std::string ep = pp + "[" + std::to_string(k) + "]";
      const long v = detail::as_int(sets[p][k], ep);
      if (v < 1 || v > m) detail::schema_error(ep, "element " + std::to_string(v) + " outside [1, " + std::to_string(m) + "]");
      elems.push_back(static_cast<int>(v));
    }
    lists.push_back(std::move(elems));
  }
  try {
    return SubsetSeq::from_lists(static_cast<int>(m), lists);
  } catch (const DomainError& e) {
    detail::schema_error(path, e.what());
  }
}

inline EdgeCaps caps_from_json(const SubsetSeq& s, const json& j, const std::string& path = "caps") {
  if (!j.is_object()) detail::schema_error(path, "expected an object keyed by \"i-j\"");
  EdgeCaps caps;
  for (const auto& [key, value] : j.items()) {
    const std::string kp = path + "." + key;
    const Edge e = detail::parse_edge_key(key, kp);
    const long c = detail::as_int(value, kp);
    try {
      caps.set(s, e, c);
    } catch (const DomainError& err) {
      detail::schema_error(kp, err.what());
    }
  }
  return caps;
}

inline json caps_to_json(const EdgeCaps& caps) {
  json out = json::object();
  for (const auto& [e, c] : caps.entries()) out[detail::edge_key(e)] = c;
  return out;
}

inline json witness_to_json(const MatchWitness& w) {
  json out = json::object();
  for (const auto& [e, c] : w.weights) out[detail::edge_key(e)] = c;
  return out;
}

// --- polymatroids and realizations ----------------------------------------

inline json polymatroid_to_json(const Polymatroid& p) {
  return {{"m", p.ground_size()}, {"rank", p.table()}};
}

inline Polymatroid polymatroid_from_json(const json& j, const std::string& path = "polymatroid") {
  const long m = detail::as_int(detail::field(j, path, "m"), path + ".m");
  if (m < 0 || m > 20) detail::schema_error(path + ".m", "must lie in [0, 20]");
  const auto& rank = detail::field(j, path, "rank");
  if (!rank.is_array()) detail::schema_error(path + ".rank", "expected an array");
  if (rank.size() != (std::size_t{1} << m)) {
    detail::schema_error(path + ".rank", "expected 2^m = " + std::to_string(std::size_t{1} << m) + " entries");
  }
  std::vector<long> table;
  for (std::size_t k = 0; k < rank.size(); ++k) table.push_back(detail::as_int(rank[k], path + ".rank[" + std::to_string(k) + "]"));
  return Polymatroid::from_table(std::move(table));
}

inline LinReal linreal_from_json(const json& j, const std::string& path = "linreal") {
  const auto& dims_j = detail::field(j, path, "blockdims");
  const ExpVec dims = detail::as_expvec(dims_j, path + ".blockdims");
  std::size_t width = 0;
  for (int d : dims) width += static_cast<std::size_t>(d);
  const auto& gens_j = detail::field(j, path, "gens");
  if (!gens_j.is_array()) detail::schema_error(path + ".gens", "expected an array of rows");
  RatMatrix gens(gens_j.size(), width);
  for (std::size_t r = 0; r < gens_j.size(); ++r) {
    const std::string rp = path + ".gens[" + std::to_string(r) + "]";
    if (!gens_j[r].is_array() || gens_j[r].size() != width) {
      detail::schema_error(rp, "expected a row of " + std::to_string(width) + " rationals");
    }
    for (std::size_t c = 0; c < width; ++c) gens(r, c) = detail::as_rat(gens_j[r][c], rp + "[" + std::to_string(c) + "]");
  }
  return LinReal(std::vector<int>(dims.begin(), dims.end()), std::move(gens));
}

inline json linreal_to_json(const LinReal& r) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.gens().rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < r.gens().cols(); ++c) row.push_back(to_string(r.gens()(i, c)));
    rows.push_back(row);
  }
  return {{"blockdims", r.blockdims()}, {"gens", rows}};
}

inline RatMatrix matrix_from_json(const json& j, const std::string& path = "matrix") {
  if (!j.is_array() || j.empty()) detail::schema_error(path, "expected a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  RatMatrix out(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) detail::schema_error(rp, "rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = detail::as_rat(j[r][c], rp + "[" + std::to_string(c) + "]");
  }
  return out;
}

// --- operator boxes --------------------------------------------------------

template <class Coeff>
json box_to_json(const OperatorBox<Coeff>& t) {
  json table = json::array();
  for (const auto& [alpha, p] : t.table()) table.push_back({{"alpha", alpha}, {"poly", poly_to_json(p)}});
  return {{"kappa", t.kappa()}, {"n_out", t.n_out()}, {"table", table}};
}

inline ExactOperatorBox box_from_json(const json& j, const std::string& path = "box") {
  const ExpVec kappa = detail::as_expvec(detail::field(j, path, "kappa"), path + ".kappa");
  const long n_out = detail::as_int(detail::field(j, path, "n_out"), path + ".n_out");
  if (n_out < 1) detail::schema_error(path + ".n_out", "must be positive");
  const auto& table_j = detail::field(j, path, "table");
  if (!table_j.is_array()) detail::schema_error(path + ".table", "expected an array");
  ExactOperatorBox::table_type table;
  for (std::size_t k = 0; k < table_j.size(); ++k) {
    const std::string tp = path + ".table[" + std::to_string(k) + "]";
    ExpVec alpha = detail::as_expvec(detail::field(table_j[k], tp, "alpha"), tp + ".alpha");
    Poly p = poly_from_json(detail::field(table_j[k], tp, "poly"), tp + ".poly");
    table.insert_or_assign(std::move(alpha), std::move(p));
  }
  return ExactOperatorBox(kappa, static_cast<std::size_t>(n_out), std::move(table));
}

// --- reports ---------------------------------------------------------------

inline json stat_table_to_json(const StatTable& t) {
  json rows = json::array();
  for (const auto& [subset, count] : t.rows) rows.push_back({{"T", subset_to_json(subset)}, {"count", count}});
  return rows;
}

inline std::string stat_table_to_csv(const StatTable& t) {
  std::string out = "T,count\n";
  for (const auto& [subset, count] : t.rows) {
    std::string key;
    for (int e : elements_of(subset)) key += (key.empty() ? "" : " ") + std::to_string(e + 1);
    out += "\"" + key + "\"," + std::to_string(count) + "\n";
  }
  return out;
}

inline json inertia_to_json(const Inertia& in) {
  return {{"pos", in.n_pos}, {"neg", in.n_neg}, {"zero", in.n_zero}};
}

inline json failure_to_json(const LorentzFailure& f) {
  json out = {{"kind", kind_name(f.kind)}};
  switch (f.kind) {
    case LorentzFailure::Kind::kNonHomogeneous:
      break;
    case LorentzFailure::Kind::kNegativeCoefficient:
      out["exponent"] = f.first;
      break;
    case LorentzFailure::Kind::kSupportNotMConvex:
      out["pair"] = {f.first, f.second};
      break;
    case LorentzFailure::Kind::kBadInertia:
      out["derivative"] = f.gamma;
      out["inertia"] = inertia_to_json(f.inertia);
      break;
  }
  return out;
}

inline json report_to_json(const LorentzReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back(failure_to_json(f));
  return {{"lorentzian", r.lorentzian},
          {"failure", r.failure() ? failure_to_json(*r.failure()) : json(nullptr)},
          {"failures", failures},
          {"checked_derivatives", r.checked_derivatives}};
}

}  // namespace lorentz::io
