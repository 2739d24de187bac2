// lorentz_cli: command-line front end for the lorentz library.
//
// Every JSON-valued flag takes inline JSON or @path. Results go to stdout as
// one JSON document; --pretty adds a human-readable rendering on stderr.
// Exit codes: 0 success, 1 domain error (JSON error object on stdout),
// 2 usage error.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lorentz/json_io.hpp"
#include "lorentz/thmverify.hpp"

using namespace lorentz;
using io::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_arg(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1), std::ios::binary);
  if (!in) throw UsageError("cannot open " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load(const std::string& arg) { return io::parse_json(read_arg(arg)); }

// "0,2,2,1" or "[0,2,2,1]"
ExpVec parse_vec(const std::string& text, const std::string& what) {
  const std::string body = read_arg(text);
  if (body.find('[') != std::string::npos) return io::detail::as_expvec(io::parse_json(body), what);
  ExpVec out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(what + ": '" + item + "' is not a nonnegative integer");
    }
  }
  return out;
}

std::vector<Rat> parse_rats(const std::string& text, const std::string& what) {
  const std::string body = read_arg(text);
  std::vector<Rat> out;
  if (body.find('[') != std::string::npos) {
    const json j = io::parse_json(body);
    if (!j.is_array()) throw ParseError(what + ": expected an array");
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(io::detail::as_rat(j[k], what + "[" + std::to_string(k) + "]"));
    return out;
  }
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

Subset parse_topics(const std::string& text, int n) {
  Subset t = 0;
  for (int v : parse_vec(text, "topics")) {
    if (v < 1 || v > n) throw DomainError("topics: part " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    t |= Subset{1} << (v - 1);
  }
  return t;
}

std::vector<std::string> var_names(char letter, std::size_t n, std::size_t offset = 0) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, letter) + std::to_string(i + 1 + offset));
  return out;
}

std::vector<std::string> symbol_names(std::size_t n, std::size_t m) {
  auto names = var_names('y', n);
  for (const auto& u : var_names('u', m)) names.push_back(u);
  return names;
}

template <class Coeff>
std::string box_text(const OperatorBox<Coeff>& box) {
  std::string out;
  for (const auto& [alpha, img] : box.table()) {
    out += "  T(x^[" + json(alpha).dump() + "]) = " + to_string(img, var_names('y', box.n_out())) + "\n";
  }
  return out;
}

std::uint64_t env_seed() {
  if (const char* s = std::getenv("LORENTZ_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError("LORENTZ_SEED must be a nonnegative integer");
    }
  }
  return 1;
}

double env_tolerance() {
  if (const char* s = std::getenv("LORENTZ_TOLERANCE")) {
    try {
      return std::stod(s);
    } catch (const std::exception&) {
      throw UsageError("LORENTZ_TOLERANCE must be a number");
    }
  }
  return 1e-9;
}

struct Output {
  json result;
  std::string pretty;
  int code = 0;
};

// --- subcommands -------------------------------------------------------------

struct MatchArgs {
  std::string sets, alpha, beta, caps;
};

Output run_match(const MatchArgs& a) {
  const auto s = io::seq_from_json(load(a.sets));
  const ExpVec alpha = parse_vec(a.alpha, "alpha");
  Output out;
  if (a.beta.empty()) {
    const auto degs = matched_degrees(s, alpha);
    out.result = {{"matched_degrees", degs}};
    for (const auto& b : degs) out.pretty += "  " + json(b).dump() + "\n";
    return out;
  }
  const ExpVec beta = parse_vec(a.beta, "beta");
  std::optional<MatchWitness> w;
  if (a.caps.empty()) {
    w = find_witness(s, alpha, beta);
  } else {
    w = find_restricted_witness(s, io::caps_from_json(s, load(a.caps)), alpha, beta);
  }
  out.result = {{"feasible", w.has_value()}, {"witness", w ? io::witness_to_json(*w) : json(nullptr)}};
  out.pretty = std::string("  ") + (w ? "feasible" : "infeasible") + "\n";
  if (w) {
    for (const auto& [e, v] : w->weights) {
      out.pretty += "  edge " + std::to_string(e.element + 1) + "-" + std::to_string(e.part + 1) + ": " + std::to_string(v) + "\n";
    }
  }
  return out;
}

struct InduceArgs {
  std::string sets, poly, kappa, compose;
  bool multiaffine = false;
};

SubsetSeq effective_seq(const std::string& sets, const std::string& compose) {
  auto s = io::seq_from_json(load(sets));
  if (!compose.empty()) s = compose_seq(s, io::seq_from_json(load(compose), "compose"));
  return s;
}

Output run_induce(const InduceArgs& a) {
  const auto s = effective_seq(a.sets, a.compose);
  Output out;
  if (!a.kappa.empty()) {
    const auto box = inducing_box(s, parse_vec(a.kappa, "kappa"));
    out.result = io::box_to_json(box);
    out.pretty = box_text(box);
    return out;
  }
  if (a.poly.empty()) throw UsageError("induce needs --poly or --kappa");
  Poly f = apply_inducing(s, io::poly_from_json(load(a.poly)));
  if (a.multiaffine) f = multiaffine_part(f);
  out.result = io::poly_to_json(f);
  out.pretty = "  " + to_string(f, var_names('y', f.nvars())) + "\n";
  return out;
}

struct SubstArgs {
  std::string sets, poly, matrix, kappa;
};

Output run_subst(const SubstArgs& a) {
  const auto s = io::seq_from_json(load(a.sets));
  std::optional<RatMatrix> m;
  if (!a.matrix.empty()) m = io::matrix_from_json(load(a.matrix));
  Output out;
  if (!a.kappa.empty()) {
    const auto box = substitution_box(s, parse_vec(a.kappa, "kappa"), m);
    out.result = io::box_to_json(box);
    out.pretty = box_text(box);
    return out;
  }
  if (a.poly.empty()) throw UsageError("subst needs --poly or --kappa");
  const Poly f = apply_substitution(s, m, io::poly_from_json(load(a.poly)));
  out.result = io::poly_to_json(f);
  out.pretty = "  " + to_string(f, var_names('y', f.nvars())) + "\n";
  return out;
}

struct CtArgs {
  std::string sets, matroid, topics;
  int r = -1;
  bool csv = false;
};

Output run_ct(const CtArgs& a) {
  const auto s = io::seq_from_json(load(a.sets));
  std::optional<Matroid> mat;
  if (!a.matroid.empty()) mat = Matroid(io::polymatroid_from_json(load(a.matroid), "matroid"));
  Output out;
  if (!a.topics.empty()) {
    const Subset t = parse_topics(a.topics, s.num_parts());
    const long c = mat ? c_t_matroid(*mat, s, t) : c_t(s, t);
    out.result = {{"T", io::subset_to_json(t)}, {"count", c}};
    out.pretty = "  C_T = " + std::to_string(c) + "\n";
    return out;
  }
  const int r = a.r >= 0 ? a.r : (mat ? static_cast<int>(mat->full_rank()) : -1);
  if (r < 0) throw UsageError("ct needs --r, --topics or --matroid");
  StatTable table{r, {}};
  if (mat) {
    for_each_k_subset(s.num_parts(), r, [&](Subset t) {
      if (const long c = c_t_matroid(*mat, s, t); c > 0) table.rows.emplace_back(t, c);
    });
  } else {
    table = stat_table(s, r);
  }
  out.result = {{"r", r}, {"rows", io::stat_table_to_json(table)}};
  out.pretty = io::stat_table_to_csv(table);
  if (a.csv) {
    out.result = json();
    out.pretty.clear();
    std::cout << io::stat_table_to_csv(table);
  }
  return out;
}

struct FpolyArgs {
  std::string sets, matroid;
  int r = -1;
};

Output run_fpoly(const FpolyArgs& a) {
  const auto s = io::seq_from_json(load(a.sets));
  Poly f(1);
  if (!a.matroid.empty()) {
    f = f_poly_matroid(Matroid(io::polymatroid_from_json(load(a.matroid), "matroid")), s);
  } else {
    if (a.r < 0) throw UsageError("fpoly needs --r or --matroid");
    f = f_poly(s, a.r);
  }
  Output out;
  out.result = io::poly_to_json(f);
  out.pretty = "  " + to_string(f, var_names('y', f.nvars())) + "\n";
  return out;
}

struct SymbolArgs {
  std::string box, sets, kappa, op = "inducing", matrix, invert, q;
  int n_out = 0;
};

Output run_symbol(const SymbolArgs& a) {
  Output out;
  if (!a.invert.empty()) {
    if (a.kappa.empty() || a.n_out < 1) throw UsageError("symbol --invert needs --kappa and --n-out");
    const auto box = box_from_symbol(io::poly_from_json(load(a.invert), "symbol"), parse_vec(a.kappa, "kappa"),
                                     static_cast<std::size_t>(a.n_out));
    out.result = io::box_to_json(box);
    out.pretty = box_text(box);
    return out;
  }
  std::optional<ExactOperatorBox> box;
  if (!a.box.empty()) {
    box = io::box_from_json(load(a.box));
  } else {
    if (a.sets.empty() || a.kappa.empty()) throw UsageError("symbol needs --box, or --sets with --kappa");
    const auto s = io::seq_from_json(load(a.sets));
    const ExpVec kappa = parse_vec(a.kappa, "kappa");
    std::optional<RatMatrix> m;
    if (!a.matrix.empty()) m = io::matrix_from_json(load(a.matrix));
    if (a.op == "inducing") box = inducing_box(s, kappa);
    else if (a.op == "substitution") box = substitution_box(s, kappa, m);
    else throw UsageError("--op must be inducing or substitution");
  }
  const auto names = symbol_names(box->n_out(), box->n_in());
  if (!a.q.empty()) {
    const FloatPoly sym = symbol_of(power_box(*box, parse_rat(a.q)));
    out.result = io::poly_to_json(sym);
    out.pretty = "  " + to_string(sym, names) + "\n";
    return out;
  }
  const Poly sym = symbol_of(*box);
  out.result = io::poly_to_json(sym);
  out.pretty = "  " + to_string(sym, names) + "\n";
  return out;
}

struct CertifyArgs {
  std::string poly, at;
  bool inertia = false, use_float = false;
  std::optional<double> tolerance;
};

Output run_certify(const CertifyArgs& a) {
  const Poly f = io::poly_from_json(load(a.poly));
  Output out;
  if (!a.at.empty()) {
    const json pt = load(a.at);
    if (!pt.is_array()) throw ParseError("at: expected an array of [re, im] pairs");
    std::vector<std::complex<double>> point;
    for (std::size_t k = 0; k < pt.size(); ++k) {
      const auto& z = pt[k];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw ParseError("at[" + std::to_string(k) + "]: expected [re, im]");
      }
      point.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
    const auto v = eval_complex(f, point);
    out.result = {{"value", {v.real(), v.imag()}}, {"modulus", std::abs(v)}};
    std::ostringstream ss;
    ss.precision(17);
    ss << "  f(p) = " << v.real() << " + " << v.imag() << "i\n";
    out.pretty = ss.str();
    return out;
  }
  if (a.inertia) {
    const Inertia in = a.use_float ? quad_inertia(to_float(f), a.tolerance.value_or(env_tolerance())) : quad_inertia(f);
    out.result = io::inertia_to_json(in);
    out.pretty = "  (+" + std::to_string(in.n_pos) + ", -" + std::to_string(in.n_neg) + ", 0:" + std::to_string(in.n_zero) + ")\n";
    return out;
  }
  const LorentzReport rep = a.use_float ? certify_lorentzian(to_float(f), a.tolerance.value_or(env_tolerance()))
                                        : certify_lorentzian(f);
  json j = io::report_to_json(rep);
  const auto h = is_homogeneous(f);
  j["degree"] = h ? (h.any_degree() ? json("any") : json(h.degree())) : json(nullptr);
  out.result = j;
  out.pretty = std::string("  ") + (rep.lorentzian ? "Lorentzian" : "not Lorentzian") + "\n";
  for (const auto& fl : rep.failures) out.pretty += "  - " + io::failure_to_json(fl).dump() + "\n";
  return out;
}

struct PmArgs {
  std::string polymatroid, linreal, free, support, sets;
  bool matroid = false, points = false;
};

Output run_pminduce(const PmArgs& a) {
  const int sources = !a.polymatroid.empty() + !a.linreal.empty() + !a.free.empty() + !a.support.empty();
  if (sources != 1) throw UsageError("pminduce needs exactly one of --polymatroid, --linreal, --free, --support");
  Output out;
  std::optional<Polymatroid> p;
  std::optional<LinReal> real;
  if (!a.polymatroid.empty()) {
    const json j = load(a.polymatroid);
    if (j.is_array()) {
      std::vector<Polymatroid> parts;
      for (std::size_t k = 0; k < j.size(); ++k) parts.push_back(io::polymatroid_from_json(j[k], "polymatroid[" + std::to_string(k) + "]"));
      if (parts.empty()) throw ParseError("polymatroid: empty direct sum");
      p = direct_sum(parts);
    } else {
      p = io::polymatroid_from_json(j);
    }
  } else if (!a.linreal.empty()) {
    real = io::linreal_from_json(load(a.linreal));
    p = linreal_rank(*real);
  } else if (!a.free.empty()) {
    const ExpVec nr = parse_vec(a.free, "free");
    if (nr.size() != 2 || nr[0] < 1) throw ParseError("free: expected N,r with N >= 1");
    p = free_polymatroid(nr[0], nr[1]);
  } else {
    p = support_polymatroid(io::poly_from_json(load(a.support)));
    if (!p) {
      out.result = {{"polymatroid", nullptr}};
      out.pretty = "  support is not the lattice-point set of a base polytope\n";
      return out;
    }
  }
  if (!a.sets.empty()) {
    const auto s = io::seq_from_json(load(a.sets));
    if (real) real = linreal_induce(*real, s);
    p = a.matroid ? induce_matroid(*p, s).polymatroid() : induce_polymatroid(*p, s);
  }
  out.result = {{"polymatroid", io::polymatroid_to_json(*p)}};
  if (real) out.result["linreal"] = io::linreal_to_json(*real);
  if (a.points) out.result["base_points"] = base_points(*p);
  if (a.matroid) {
    json bases = json::array();
    for (Subset b : matroid_bases(Matroid(*p))) bases.push_back(io::subset_to_json(b));
    out.result["bases"] = bases;
  }
  out.pretty = "  rank table " + json(p->table()).dump() + "\n";
  return out;
}

struct HallArgs {
  std::string polymatroid, sets, delta;
};

Output run_hallrado(const HallArgs& a) {
  const auto p = io::polymatroid_from_json(load(a.polymatroid));
  const auto e = io::seq_from_json(load(a.sets));
  const auto r = hall_rado_both(p, e, parse_vec(a.delta, "delta"));
  if (r.by_rank != r.by_matching) throw InternalError("hall_rado: rank route and matching route disagree");
  Output out;
  out.result = {{"member", r.by_rank},
                {"by_rank", r.by_rank},
                {"by_matching", r.by_matching},
                {"gamma", r.gamma ? json(*r.gamma) : json(nullptr)}};
  out.pretty = std::string("  ") + (r.by_rank ? "member" : "not a member") + "\n";
  return out;
}

struct TabArgs {
  std::string sets, kappa, a, b, q, matrix;
  bool tilde = false;
};

Output run_tab(const TabArgs& t) {
  const auto s = io::seq_from_json(load(t.sets));
  Output out;
  if (t.tilde) {
    const auto tilde = build_tilde_with_owners(s);
    json owners = json::array();
    for (int o : tilde.owner) owners.push_back(o + 1);
    out.result = {{"sets", io::seq_to_json(tilde.seq)}, {"owner", owners}};
    out.pretty = "  " + io::seq_to_json(tilde.seq).dump() + "\n";
    return out;
  }
  if (t.kappa.empty()) throw UsageError("tab-family needs --kappa (or --tilde)");
  const ExpVec kappa = parse_vec(t.kappa, "kappa");
  if (!t.q.empty()) {
    std::optional<RatMatrix> m;
    if (!t.matrix.empty()) m = io::matrix_from_json(load(t.matrix));
    const auto box = power_box(substitution_box(s, kappa, m), parse_rat(t.q));
    out.result = io::box_to_json(box);
    out.pretty = box_text(box);
    return out;
  }
  const std::size_t n = static_cast<std::size_t>(s.num_parts());
  const std::size_t big_n = build_tilde_with_owners(s).owner.size();
  const std::vector<Rat> a = t.a.empty() ? std::vector<Rat>(n, 1) : parse_rats(t.a, "a");
  const std::vector<Rat> b = t.b.empty() ? std::vector<Rat>(big_n, 0) : parse_rats(t.b, "b");
  const auto box = t_ab_box(s, a, b, kappa);
  out.result = io::box_to_json(box);
  out.pretty = box_text(box);
  return out;
}

struct VerifyArgs {
  std::vector<std::string> checks;
  std::string replay;
  verify::TrialConfig cfg;
};

Output run_verify(const VerifyArgs& v) {
  Output out;
  if (!v.replay.empty()) {
    const json inst = load(v.replay);
    const auto reason = verify::replay_instance(inst);
    out.result = {{"check", inst.value("check", "")}, {"passed", !reason}, {"reason", reason ? json(*reason) : json(nullptr)}};
    out.code = reason ? 1 : 0;
    out.pretty = std::string("  ") + (reason ? "FAIL: " + *reason : "pass") + "\n";
    return out;
  }
  v.cfg.validate();
  json results = json::array();
  bool all = true;
  for (const auto& c : verify::all_checks()) {
    if (!v.checks.empty() && std::find(v.checks.begin(), v.checks.end(), c.name) == v.checks.end()) continue;
    const auto r = c.run(v.cfg);
    all = all && r.passed();
    results.push_back(verify::result_to_json(r));
    out.pretty += "  " + std::string(r.passed() ? "PASS " : "FAIL ") + c.name + " (" + std::to_string(r.trials) +
                  " trials, " + std::to_string(r.failures.size()) + " failures)\n";
  }
  if (results.empty()) throw UsageError("no check matches --check");
  out.result = {{"config",
                 {{"seed", v.cfg.seed},
                  {"trials", v.cfg.trials},
                  {"tolerance", v.cfg.tolerance},
                  {"max_m", v.cfg.max_m},
                  {"max_n", v.cfg.max_n},
                  {"max_rank", v.cfg.max_rank},
                  {"max_kappa", v.cfg.max_kappa}}},
                {"results", results},
                {"passed", all}};
  out.code = all ? 0 : 1;
  return out;
}

json error_object(const char* type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inducing operators, S-matchings, polymatroids and Lorentzian certification"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output on stderr");

  MatchArgs match;
  auto* c_match = app.add_subcommand("match", "S-matching feasibility, witness, or matched degrees");
  c_match->add_option("--sets", match.sets, "subset sequence JSON")->required();
  c_match->add_option("--alpha", match.alpha, "degree vector on [m]")->required();
  c_match->add_option("--beta", match.beta, "degree vector on [n]; omit to list all matched beta");
  c_match->add_option("--caps", match.caps, "edge caps {\"i-j\": cap}");

  InduceArgs induce;
  auto* c_induce = app.add_subcommand("induce", "apply I_S to a polynomial, or tabulate it on a box");
  c_induce->add_option("--sets", induce.sets, "subset sequence JSON")->required();
  c_induce->add_option("--poly", induce.poly, "polynomial JSON");
  c_induce->add_option("--kappa", induce.kappa, "box bound; emits the operator box");
  c_induce->add_option("--compose", induce.compose, "second sequence; uses the composed graph");
  c_induce->add_flag("--multiaffine", induce.multiaffine, "keep only square-free terms");

  SubstArgs subst;
  auto* c_subst = app.add_subcommand("subst", "apply A_S (x_i -> sum of a_ij y_j)");
  c_subst->add_option("--sets", subst.sets, "subset sequence JSON")->required();
  c_subst->add_option("--poly", subst.poly, "polynomial JSON");
  c_subst->add_option("--matrix", subst.matrix, "m x n nonnegative matrix with the pattern of S");
  c_subst->add_option("--kappa", subst.kappa, "box bound; emits the operator box");

  CtArgs ct;
  auto* c_ct = app.add_subcommand("ct", "matching statistic table C_T(S)");
  c_ct->add_option("--sets", ct.sets, "subset sequence JSON")->required();
  c_ct->add_option("--r", ct.r, "size of T");
  c_ct->add_option("--topics", ct.topics, "single T, 1-based part indices");
  c_ct->add_option("--matroid", ct.matroid, "restrict B to bases of this matroid");
  c_ct->add_flag("--csv", ct.csv, "CSV instead of JSON");

  FpolyArgs fpoly;
  auto* c_fpoly = app.add_subcommand("fpoly", "the polynomial sum C_T y^T");
  c_fpoly->add_option("--sets", fpoly.sets, "subset sequence JSON")->required();
  c_fpoly->add_option("--r", fpoly.r, "size of T");
  c_fpoly->add_option("--matroid", fpoly.matroid, "matroid JSON; uses its bases");

  SymbolArgs symbol;
  auto* c_symbol = app.add_subcommand("symbol", "operator symbol, q-power symbol, or inversion");
  c_symbol->add_option("--box", symbol.box, "operator box JSON");
  c_symbol->add_option("--sets", symbol.sets, "subset sequence JSON");
  c_symbol->add_option("--kappa", symbol.kappa, "box bound");
  c_symbol->add_option("--op", symbol.op, "inducing or substitution")->check(CLI::IsMember({"inducing", "substitution"}));
  c_symbol->add_option("--matrix", symbol.matrix, "substitution matrix");
  c_symbol->add_option("--q", symbol.q, "symbol of the q-power operator, q in [0,1]");
  c_symbol->add_option("--invert", symbol.invert, "symbol polynomial JSON to turn back into a box");
  c_symbol->add_option("--n-out", symbol.n_out, "output variable count for --invert");

  CertifyArgs certify;
  auto* c_certify = app.add_subcommand("certify", "Lorentzian certification, quadratic inertia, or complex evaluation");
  c_certify->add_option("--poly", certify.poly, "polynomial JSON")->required();
  c_certify->add_flag("--inertia", certify.inertia, "inertia of a quadratic form");
  c_certify->add_flag("--float", certify.use_float, "floating-point path with tolerance");
  c_certify->add_option("--tolerance", certify.tolerance, "zero threshold for --float");
  c_certify->add_option("--at", certify.at, "evaluate at [[re,im],...]");

  PmArgs pm;
  auto* c_pm = app.add_subcommand("pminduce", "build, induce and inspect polymatroids");
  c_pm->add_option("--polymatroid", pm.polymatroid, "polymatroid JSON, or an array for a direct sum");
  c_pm->add_option("--linreal", pm.linreal, "rational linear realization JSON");
  c_pm->add_option("--free", pm.free, "free polymatroid N,r");
  c_pm->add_option("--support", pm.support, "polynomial whose support defines the polymatroid");
  c_pm->add_option("--sets", pm.sets, "induce along this sequence");
  c_pm->add_flag("--matroid", pm.matroid, "matroid induction; also lists bases");
  c_pm->add_flag("--points", pm.points, "list base-polytope lattice points");

  HallArgs hall;
  auto* c_hall = app.add_subcommand("hallrado", "base-polytope membership by both Hall-Rado routes");
  c_hall->add_option("--polymatroid", hall.polymatroid, "polymatroid JSON on E")->required();
  c_hall->add_option("--sets", hall.sets, "sequence of subsets of E")->required();
  c_hall->add_option("--delta", hall.delta, "candidate point")->required();

  TabArgs tab;
  auto* c_tab = app.add_subcommand("tab-family", "T_{a,b} operators, q-power boxes, and the tilde sequence");
  c_tab->add_option("--sets", tab.sets, "subset sequence JSON")->required();
  c_tab->add_option("--kappa", tab.kappa, "box bound");
  c_tab->add_option("--a", tab.a, "weights on the n original parts (default all 1)");
  c_tab->add_option("--b", tab.b, "weights on the N singleton parts (default all 0)");
  c_tab->add_option("--q", tab.q, "power box of the substitution operator instead");
  c_tab->add_option("--matrix", tab.matrix, "substitution matrix for --q");
  c_tab->add_flag("--tilde", tab.tilde, "print the tilde sequence and its owners");

  VerifyArgs ver;
  ver.cfg.seed = 1;
  auto* c_verify = app.add_subcommand("verify", "run the randomized verification checks");
  c_verify->add_option("--check", ver.checks, "restrict to named checks");
  c_verify->add_option("--seed", ver.cfg.seed, "base seed (default LORENTZ_SEED or 1)");
  c_verify->add_option("--trials", ver.cfg.trials, "trials per check");
  c_verify->add_option("--tolerance", ver.cfg.tolerance, "float tolerance (default LORENTZ_TOLERANCE or 1e-9)");
  c_verify->add_option("--max-m", ver.cfg.max_m);
  c_verify->add_option("--max-n", ver.cfg.max_n);
  c_verify->add_option("--max-rank", ver.cfg.max_rank);
  c_verify->add_option("--max-kappa", ver.cfg.max_kappa);
  c_verify->add_option("--replay", ver.replay, "re-run one serialized failure record");

  try {
    ver.cfg.seed = env_seed();
    ver.cfg.tolerance = env_tolerance();
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Output out;
  try {
    if (*c_match) out = run_match(match);
    else if (*c_induce) out = run_induce(induce);
    else if (*c_subst) out = run_subst(subst);
    else if (*c_ct) out = run_ct(ct);
    else if (*c_fpoly) out = run_fpoly(fpoly);
    else if (*c_symbol) out = run_symbol(symbol);
    else if (*c_certify) out = run_certify(certify);
    else if (*c_pm) out = run_pminduce(pm);
    else if (*c_hall) out = run_hallrado(hall);
    else if (*c_tab) out = run_tab(tab);
    else if (*c_verify) out = run_verify(ver);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cout << error_object("parse", e.what()).dump() << "\n";
    return 1;
  } catch (const ArityError& e) {
    std::cout << error_object("arity", e.what()).dump() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cout << error_object("domain", e.what()).dump() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cout << error_object("internal", e.what()).dump() << "\n";
    return 1;
  }
  if (!out.result.is_null()) std::cout << out.result.dump() << "\n";
  if (pretty && !out.pretty.empty()) std::cerr << out.pretty;
  return out.code;
}
