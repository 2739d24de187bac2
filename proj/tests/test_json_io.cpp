#include <gtest/gtest.h>

#include "lorentz/json_io.hpp"

using namespace lorentz;
using namespace lorentz::io;

TEST(JsonIo, SyntaxErrorReportsOffset) {
  try {
    parse_json("{\"m\": 3,, }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("byte 9"), std::string::npos) << e.what();
  }
}

TEST(JsonIo, PolynomialRoundTrip) {
  Poly f(3);
  f.add_term({0, 0, 2}, Rat(1, 2));
  f.add_term({1, 1, 0}, Rat(5));
  f.add_term({0, 0, 0}, Rat(-7, 3));
  const json j = poly_to_json(f);
  EXPECT_EQ(poly_from_json(j), f);
  EXPECT_EQ(poly_to_json(poly_from_json(j)), j);
  // graded lex, highest degree first
  EXPECT_EQ(j["terms"][0]["exp"], json({1, 1, 0}));
  EXPECT_EQ(j["terms"][2]["exp"], json({0, 0, 0}));
  EXPECT_EQ(j["terms"][1]["den"], "2");
}

TEST(JsonIo, NormalizedBasisInput) {
  const json plain = parse_json(R"({"nvars":2,"basis":"plain","terms":[{"exp":[2,0],"num":"3"}]})");
  const json norm = parse_json(R"({"nvars":2,"basis":"normalized","terms":[{"exp":[2,0],"num":"6"}]})");
  EXPECT_EQ(poly_from_json(plain), poly_from_json(norm));
}

TEST(JsonIo, BigIntegers) {
  const json j = parse_json(R"({"nvars":1,"terms":[{"exp":[1],"num":"123456789012345678901234567891","den":"2"}]})");
  const Poly f = poly_from_json(j);
  EXPECT_EQ(poly_to_json(f)["terms"][0]["num"], "123456789012345678901234567891");
  EXPECT_EQ(poly_to_json(f)["terms"][0]["den"], "2");
}

TEST(JsonIo, PolynomialSchemaErrors) {
  auto msg = [](const char* text) {
    try {
      poly_from_json(parse_json(text));
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  EXPECT_NE(msg(R"({"terms":[]})").find("poly"), std::string::npos);
  EXPECT_NE(msg(R"({"nvars":2,"terms":[{"exp":[1],"num":"1"}]})").find("poly.terms[0].exp"), std::string::npos);
  EXPECT_NE(msg(R"({"nvars":2,"terms":[{"exp":[1,0],"num":"x"}]})").find("poly.terms[0]"), std::string::npos);
  EXPECT_NE(msg(R"({"nvars":2,"terms":[{"exp":[1,0],"num":"1","den":"0"}]})").find("den"), std::string::npos);
  EXPECT_NE(msg(R"({"nvars":2,"basis":"weird","terms":[]})").find("basis"), std::string::npos);
}

TEST(JsonIo, SubsetSequences) {
  const auto s = seq_from_json(parse_json(R"({"m":4,"sets":[[1,2,3,4],[2,3],[3,4]]})"));
  EXPECT_EQ(s.ground_size(), 4);
  EXPECT_EQ(s.num_parts(), 3);
  EXPECT_EQ(seq_to_json(s).dump(), R"({"m":4,"sets":[[1,2,3,4],[2,3],[3,4]]})");
  EXPECT_EQ(seq_to_json(seq_from_json(parse_json(R"({"m":3,"sets":[[3,1]]})"))).dump(), R"({"m":3,"sets":[[1,3]]})");
  EXPECT_THROW(seq_from_json(parse_json(R"({"m":3,"sets":[[4]]})")), ParseError);
  EXPECT_THROW(seq_from_json(parse_json(R"({"m":3,"sets":[[0]]})")), ParseError);
  EXPECT_THROW(seq_from_json(parse_json(R"({"m":3,"sets":[]})")), ParseError);
}

TEST(JsonIo, Caps) {
  const auto s = SubsetSeq::from_lists(2, {{1, 2}});
  const auto caps = caps_from_json(s, parse_json(R"({"1-1":2,"2-1":0})"));
  EXPECT_EQ(caps.cap({0, 0}), 2);
  EXPECT_EQ(caps_to_json(caps), parse_json(R"({"1-1":2,"2-1":0})"));
  EXPECT_THROW(caps_from_json(s, parse_json(R"({"1-2":1})")), ParseError);
  EXPECT_THROW(caps_from_json(s, parse_json(R"({"12":1})")), ParseError);
}

TEST(JsonIo, Polymatroid) {
  const auto p = polymatroid_from_json(parse_json(R"({"m":2,"rank":[0,1,1,1]})"));
  EXPECT_EQ(p, uniform_polymatroid_table(2, 1));
  EXPECT_EQ(polymatroid_to_json(p).dump(), R"({"m":2,"rank":[0,1,1,1]})");
  EXPECT_THROW(polymatroid_from_json(parse_json(R"({"m":2,"rank":[0,1,1]})")), ParseError);
  EXPECT_THROW(polymatroid_from_json(parse_json(R"({"m":1,"rank":[1,1]})")), AxiomError);
}

TEST(JsonIo, LinRealAndMatrix) {
  const auto r = linreal_from_json(parse_json(R"({"blockdims":[1,1],"gens":[["1","1/2"]]})"));
  EXPECT_EQ(r.gens()(0, 1), Rat(1, 2));
  EXPECT_EQ(linreal_from_json(linreal_to_json(r)).gens(), r.gens());
  EXPECT_THROW(linreal_from_json(parse_json(R"({"blockdims":[1,1],"gens":[["1"]]})")), ParseError);
  const auto a = matrix_from_json(parse_json(R"([[1,"2/3"],[0,4]])"));
  EXPECT_EQ(a(0, 1), Rat(2, 3));
  EXPECT_THROW(matrix_from_json(parse_json(R"([[1],[0,4]])")), ParseError);
}

TEST(JsonIo, BoxRoundTrip) {
  const auto s = SubsetSeq::from_lists(2, {{1}, {2}, {1, 2}});
  const auto box = inducing_box(s, {1, 1});
  EXPECT_EQ(box_from_json(box_to_json(box)), box);
  // missing entries read as zero
  const auto partial = box_from_json(parse_json(R"({"kappa":[1],"n_out":1,"table":[]})"));
  EXPECT_TRUE(partial.image({1}).is_zero());
}

TEST(JsonIo, Reports) {
  StatTable t{2, {{0b011, 5}, {0b101, 5}}};
  EXPECT_EQ(stat_table_to_json(t).dump(), R"([{"T":[1,2],"count":5},{"T":[1,3],"count":5}])");
  EXPECT_EQ(stat_table_to_csv(t), "T,count\n\"1 2\",5\n\"1 3\",5\n");
  const auto rep = certify_lorentzian(Poly::monomial({2, 0}) + Poly::monomial({0, 2}));
  const json j = report_to_json(rep);
  EXPECT_FALSE(j["lorentzian"].get<bool>());
  EXPECT_EQ(j["failure"]["kind"], "support-not-M-convex");
  EXPECT_EQ(report_to_json(certify_lorentzian(Poly(2)))["failure"], json(nullptr));
}
