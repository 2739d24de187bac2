#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

const std::string kSamples = LORENTZ_SAMPLES_DIR;

std::string sample(const std::string& name) { return "@" + kSamples + "/" + name; }

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(LORENTZ_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, const std::string& env = "") {
  const CliRun r = run(args, env);
  EXPECT_EQ(r.code, 0) << args << "\n" << r.out;
  return json::parse(r.out);
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST(Cli, MatchFeasibleWithWitness) {
  const json j = run_json("match --sets " + sample("worked_seq.json") + " --alpha 0,2,2,1 --beta 2,2,1");
  EXPECT_TRUE(j["feasible"].get<bool>());
  long total = 0;
  for (const auto& [k, v] : j["witness"].items()) total += v.get<long>();
  EXPECT_EQ(total, 5);
}

TEST(Cli, MatchInfeasibleAndDegrees) {
  const json j = run_json("match --sets " + sample("nonstable_seq.json") + " --alpha 1,1,1 --beta 0,0,3");
  EXPECT_FALSE(j["feasible"].get<bool>());
  EXPECT_TRUE(j["witness"].is_null());
  const json d = run_json("match --sets " + sample("worked_seq.json") + " --alpha 1,1,0,0");
  EXPECT_EQ(d["matched_degrees"], json::parse("[[1,1,0],[2,0,0]]"));
}

TEST(Cli, MatchRestricted) {
  const json j = run_json("match --sets " + quoted(R"({"m":1,"sets":[[1]]})") + " --alpha 2 --beta 2 --caps " +
                          quoted(R"({"1-1":1})"));
  EXPECT_FALSE(j["feasible"].get<bool>());
  const json k = run_json("match --sets " + sample("nonstable_seq.json") + " --alpha 1,1,1 --beta 1,1,1 --caps " +
                          sample("caps_unit.json"));
  EXPECT_TRUE(k["feasible"].get<bool>());
}

TEST(Cli, InduceWorkedExample) {
  const json j = run_json("induce --sets " + sample("worked_seq.json") + " --poly " + sample("e2_four.json"));
  EXPECT_EQ(j["nvars"], 3);
  json want = json::parse(R"([
    {"exp":[2,0,0],"num":"3","den":"1"},{"exp":[1,1,0],"num":"5","den":"1"},{"exp":[1,0,1],"num":"5","den":"1"},
    {"exp":[0,2,0],"num":"1","den":"2"},{"exp":[0,1,1],"num":"3","den":"1"},{"exp":[0,0,2],"num":"1","den":"2"}])");
  EXPECT_EQ(j["terms"], want);
}

TEST(Cli, InduceBoxComposeMultiaffine) {
  const json box = run_json("induce --sets " + sample("three_subset_seq.json") + " --kappa 1,1");
  EXPECT_EQ(box["table"].size(), 4U);
  const json c = run_json("induce --sets " + sample("compose_first.json") + " --compose " +
                          sample("compose_second.json") + " --poly " + sample("x1x2.json"));
  EXPECT_EQ(c["terms"].size(), 3U);
  const json m = run_json("induce --sets " + sample("worked_seq.json") + " --poly " + sample("e2_four.json") +
                          " --multiaffine");
  EXPECT_EQ(m["terms"].size(), 3U);
}

TEST(Cli, Subst) {
  const json j = run_json("subst --sets " + sample("three_subset_seq.json") + " --poly " + sample("x1x2.json"));
  EXPECT_EQ(j["terms"].size(), 4U);
  const json b = run_json("subst --sets " + sample("three_subset_seq.json") + " --kappa 1,1 --matrix " +
                          quoted("[[2,0,1],[0,1,3]]"));
  EXPECT_EQ(b["table"].size(), 4U);
  const CliRun bad = run("subst --sets " + sample("three_subset_seq.json") + " --poly " + sample("x1x2.json") +
                      " --matrix " + quoted("[[1,1,1],[0,1,1]]"));
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, CtTableAndCsv) {
  const json j = run_json("ct --sets " + sample("worked_seq.json") + " --r 2");
  EXPECT_EQ(j["rows"], json::parse(R"([{"T":[1,2],"count":5},{"T":[1,3],"count":5},{"T":[2,3],"count":3}])"));
  const CliRun csv = run("ct --sets " + sample("worked_seq.json") + " --r 2 --csv");
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("5"), std::string::npos);
  const json one = run_json("ct --sets " + sample("worked_seq.json") + " --topics 2,3");
  EXPECT_EQ(one["count"], 3);
  const json mat = run_json("ct --sets " + sample("worked_seq.json") + " --matroid " + sample("u24.json"));
  EXPECT_EQ(mat["r"], 2);
  EXPECT_EQ(mat["rows"], j["rows"]);
}

TEST(Cli, Fpoly) {
  const json j = run_json("fpoly --sets " + sample("worked_seq.json") + " --r 2");
  EXPECT_EQ(j["terms"].size(), 3U);
  const json m = run_json("fpoly --sets " + sample("worked_seq.json") + " --matroid " + sample("u24.json"));
  EXPECT_EQ(m, j);
}

TEST(Cli, SymbolRoundTrip) {
  const json sym = run_json("symbol --sets " + sample("three_subset_seq.json") + " --kappa 1,1");
  EXPECT_EQ(sym["nvars"], 5);
  const json box = run_json("induce --sets " + sample("three_subset_seq.json") + " --kappa 1,1");
  const json back = run_json("symbol --invert " + quoted(sym.dump()) + " --kappa 1,1 --n-out 3");
  EXPECT_EQ(back, box);
  const json from_box = run_json("symbol --box " + quoted(box.dump()));
  EXPECT_EQ(from_box, sym);
  const json q = run_json("symbol --sets " + sample("three_subset_seq.json") + " --kappa 1,1 --op substitution --q 1/2");
  EXPECT_FALSE(q["terms"].empty());
}

TEST(Cli, Certify) {
  const json s = run_json("induce --sets " + sample("nonstable_seq.json") + " --poly " + sample("x123.json"));
  const json ok = run_json("certify --poly " + quoted(s.dump()));
  EXPECT_TRUE(ok["lorentzian"].get<bool>());
  EXPECT_EQ(ok["degree"], 3);
  const json bad = run_json("certify --poly " + sample("sum_of_squares.json"));
  EXPECT_FALSE(bad["lorentzian"].get<bool>());
  const json in = run_json("certify --inertia --poly " + sample("sum_of_squares.json"));
  EXPECT_EQ(in, run_json("certify --inertia --float --tolerance 1e-12 --poly " + sample("sum_of_squares.json")));
  const json zero = run_json("certify --poly " + sample("zero.json"));
  EXPECT_TRUE(zero["lorentzian"].get<bool>());
  const json at = run_json("certify --poly " + sample("x1x2.json") + " --at " + quoted("[[0,1],[0,1]]"));
  EXPECT_DOUBLE_EQ(at["value"][0].get<double>(), -1.0);
}

TEST(Cli, Pminduce) {
  const json ind = run_json("pminduce --polymatroid " + sample("u24.json") + " --sets " + sample("worked_seq.json") +
                            " --points");
  EXPECT_EQ(ind["polymatroid"]["rank"], json::parse("[0,2,2,2,2,2,2,2]"));
  EXPECT_EQ(ind["base_points"].size(), 6U);
  const json mat = run_json("pminduce --polymatroid " + sample("u24.json") + " --sets " + sample("worked_seq.json") +
                            " --matroid");
  EXPECT_EQ(mat["bases"].size(), 3U);
  const json lin = run_json("pminduce --linreal " + sample("linreal_u23.json") + " --sets " +
                            quoted(R"({"m":3,"sets":[[1,2],[3]]})"));
  EXPECT_EQ(lin["polymatroid"]["rank"], json::parse("[0,2,1,2]"));
  EXPECT_TRUE(lin.contains("linreal"));
  const json fr = run_json("pminduce --free 2,2 --points");
  EXPECT_EQ(fr["base_points"].size(), 3U);
  const json sum = run_json("pminduce --polymatroid " + quoted(R"([{"m":1,"rank":[0,1]},{"m":1,"rank":[0,1]}])"));
  EXPECT_EQ(sum["polymatroid"]["rank"], json::parse("[0,1,1,2]"));
  const json sup = run_json("pminduce --support " + sample("sum_of_squares.json"));
  EXPECT_TRUE(sup["polymatroid"].is_null());
  const CliRun axiom = run("pminduce --polymatroid " + quoted(R"({"m":1,"rank":[1,1]})"));
  EXPECT_EQ(axiom.code, 1);
  EXPECT_EQ(run("pminduce").code, 2);
}

TEST(Cli, HallRado) {
  const json yes = run_json("hallrado --polymatroid " + sample("u24.json") + " --sets " + sample("worked_seq.json") +
                            " --delta 1,1,0");
  EXPECT_TRUE(yes["member"].get<bool>());
  EXPECT_EQ(yes["by_rank"], yes["by_matching"]);
  const json no = run_json("hallrado --polymatroid " + sample("u24.json") + " --sets " + sample("worked_seq.json") +
                           " --delta 1,1,1");
  EXPECT_FALSE(no["member"].get<bool>());
}

TEST(Cli, TabFamily) {
  const json tilde = run_json("tab-family --sets " + sample("three_subset_seq.json") + " --tilde");
  EXPECT_EQ(tilde["sets"]["sets"].size(), 7U);
  EXPECT_EQ(tilde["owner"], json::parse("[1,2,3,3]"));
  const json id = run_json("tab-family --sets " + sample("three_subset_seq.json") + " --kappa 1,1");
  const json ind = run_json("induce --sets " + sample("three_subset_seq.json") + " --kappa 1,1");
  EXPECT_EQ(id, ind);
  const json q = run_json("tab-family --sets " + sample("three_subset_seq.json") + " --kappa 1,1 --q 1");
  EXPECT_EQ(q["table"].size(), 4U);
  EXPECT_EQ(run("tab-family --sets " + sample("three_subset_seq.json") + " --kappa 1,1 --a 1,-1,1").code, 1);
}

TEST(Cli, Verify) {
  const json j = run_json("verify --trials 3 --seed 7");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["results"].size(), 7U);
  EXPECT_EQ(j["config"]["seed"], 7);
  const json one = run_json("verify --check examples");
  EXPECT_EQ(one["results"].size(), 1U);
  const json env = run_json("verify --check thm_main1 --trials 2", "LORENTZ_SEED=11 LORENTZ_TOLERANCE=1e-8");
  EXPECT_EQ(env["config"]["seed"], 11);
  EXPECT_DOUBLE_EQ(env["config"]["tolerance"].get<double>(), 1e-8);
  const json rep = run_json("verify --replay " + quoted(R"({"check":"thm_main1","sets":{"m":2,"sets":[[1,2]]},"r":1})"));
  EXPECT_TRUE(rep["passed"].get<bool>());
  EXPECT_EQ(run("verify --check nosuch").code, 2);
}

TEST(Cli, ErrorsAndUsage) {
  const CliRun arity = run("match --sets " + sample("worked_seq.json") + " --alpha 1,1 --beta 1,1,0");
  EXPECT_EQ(arity.code, 1);
  EXPECT_EQ(json::parse(arity.out)["error"]["type"], "arity");
  const CliRun parse = run("match --sets " + quoted("{\"m\": 3,, }") + " --alpha 1 --beta 1");
  EXPECT_EQ(parse.code, 1);
  EXPECT_EQ(json::parse(parse.out)["error"]["type"], "parse");
  const CliRun dom = run("match --sets " + quoted(R"({"m":2,"sets":[[1,3]]})") + " --alpha 1,0 --beta 1");
  EXPECT_EQ(dom.code, 1);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("nosuch").code, 2);
  EXPECT_EQ(run("match --alpha 1").code, 2);
  EXPECT_EQ(run("match --sets @/nonexistent/file --alpha 1").code, 2);
  EXPECT_EQ(run("verify", "LORENTZ_SEED=abc").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::string args : {"induce --sets " + sample("worked_seq.json") + " --poly " + sample("e2_four.json"),
                                 std::string("verify --trials 4"),
                                 "ct --sets " + sample("worked_seq.json") + " --r 2 --csv"}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << args;
  }
}
