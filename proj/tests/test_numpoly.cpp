#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "lorentz/numpoly.hpp"
#include "lorentz/thmverify.hpp"

using namespace lorentz;

namespace {

Poly x(std::size_t n, std::size_t i) { return Poly::variable(n, i); }

Poly random_poly(std::mt19937_64& rng, std::size_t n, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-4, 4), den(1, 3);
  Poly p(n);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(n);
    for (auto& v : e) v = deg(rng) / static_cast<int>(n);
    p.add_term(e, Rat(coef(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST(Numpoly, DifferenceOfSquares) {
  const Poly a = x(2, 0) + x(2, 1);
  const Poly b = x(2, 0) - x(2, 1);
  EXPECT_EQ(a * b, Poly::monomial({2, 0}) - Poly::monomial({0, 2}));
}

TEST(Numpoly, ScaleByZeroPrunes) {
  const Poly f = x(3, 0) * x(3, 1) + x(3, 2);
  const Poly z = scale(f, Rat(0));
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
}

TEST(Numpoly, ArityMismatchThrows) {
  EXPECT_THROW(x(2, 0) + x(3, 0), ArityError);
  EXPECT_THROW(x(2, 0) * x(3, 0), ArityError);
  EXPECT_THROW(Poly(0), ArityError);
}

TEST(Numpoly, NormalizedCoefficient) {
  const Poly f = Poly::monomial({0, 0, 2}, Rat(1, 2));
  EXPECT_EQ(normalized_coeff(f, {0, 0, 2}), Rat(1));
  EXPECT_EQ(normalized_coeff(f, {1, 0, 1}), Rat(0));
  EXPECT_EQ(normalized_coeff(Poly::monomial({1, 1, 0}, Rat(5)), {1, 1, 0}), Rat(5));
  EXPECT_THROW(normalized_coeff(f, {1, 1}), ArityError);
}

TEST(Numpoly, NormalizedMonomialIsDividedPower) {
  const Poly f = Poly::normalized_monomial({2, 0, 3}, Rat(6));
  EXPECT_EQ(f.coeff({2, 0, 3}), Rat(6, 12));
  EXPECT_EQ(normalized_coeff(f, {2, 0, 3}), Rat(6));
}

TEST(Numpoly, MultiaffinePart) {
  Poly f(3);
  f.add_term({2, 0, 0}, 3);
  f.add_term({1, 1, 0}, 5);
  f.add_term({1, 0, 1}, 5);
  f.add_term({0, 1, 1}, 3);
  f.add_term({0, 2, 0}, Rat(1, 2));
  f.add_term({0, 0, 2}, Rat(1, 2));
  Poly want(3);
  want.add_term({1, 1, 0}, 5);
  want.add_term({1, 0, 1}, 5);
  want.add_term({0, 1, 1}, 3);
  EXPECT_EQ(multiaffine_part(f), want);
  EXPECT_TRUE(multiaffine_part(Poly(2)).is_zero());
  EXPECT_TRUE(multiaffine_part(Poly::monomial({2, 1})).is_zero());
}

TEST(Numpoly, MultiaffineIdempotentAndLinear) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Poly a = random_poly(rng, 3, 6, 6);
    const Poly b = random_poly(rng, 3, 6, 6);
    EXPECT_EQ(multiaffine_part(multiaffine_part(a)), multiaffine_part(a));
    EXPECT_EQ(multiaffine_part(a + b * Rat(3, 2)), multiaffine_part(a) + multiaffine_part(b) * Rat(3, 2));
  }
}

TEST(Numpoly, ElementarySymmetric) {
  const Poly e = elementary_symmetric(4, 2);
  EXPECT_EQ(e.terms().size(), 6U);
  for (const auto& [exp, c] : e.terms()) {
    EXPECT_EQ(total_degree(exp), 2);
    EXPECT_EQ(c, Rat(1));
  }
  EXPECT_EQ(elementary_symmetric(3, 0), Poly::constant(3, 1));
  EXPECT_EQ(elementary_symmetric(3, 3), Poly::monomial({1, 1, 1}));
  EXPECT_THROW(elementary_symmetric(3, 4), DomainError);
  EXPECT_THROW(elementary_symmetric(3, -1), DomainError);
}

TEST(Numpoly, ElementarySymmetricCounts) {
  const long binom[6][6] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}, {1, 5, 10, 10, 5, 1}};
  for (int m = 1; m <= 5; ++m) {
    for (int r = 0; r <= m; ++r) {
      const Poly e = elementary_symmetric(m, r);
      EXPECT_EQ(static_cast<long>(e.terms().size()), binom[m][r]);
      const auto h = is_homogeneous(e);
      ASSERT_TRUE(h);
      EXPECT_EQ(h.degree(), r);
    }
  }
}

TEST(Numpoly, Homogeneity) {
  EXPECT_EQ(is_homogeneous(elementary_symmetric(3, 2)).degree(), 2);
  EXPECT_FALSE(is_homogeneous(x(2, 0) + x(2, 0) * x(2, 1)));
  const auto z = is_homogeneous(Poly(2));
  EXPECT_TRUE(z);
  EXPECT_TRUE(z.any_degree());
}

TEST(Numpoly, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const Poly a = random_poly(rng, 3, 4, 4);
    const Poly b = random_poly(rng, 3, 4, 4);
    const Poly c = random_poly(rng, 3, 4, 4);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Numpoly, ExampleTwoSixArithmetic) {
  const Poly lin = x(3, 0) + x(3, 1) + x(3, 2);
  const Poly f = (pow(lin, 3) - Poly::monomial({0, 0, 3})) * Rat(1, 6);
  EXPECT_EQ(f.coeff({1, 1, 1}), Rat(1));
  EXPECT_EQ(f.coeff({0, 0, 3}), Rat(0));
  EXPECT_EQ(f.coeff({3, 0, 0}), Rat(1, 6));
  EXPECT_EQ(f.coeff({2, 0, 1}), Rat(1, 2));
}

TEST(Numpoly, ComplexEvaluation) {
  const Poly f = Poly::monomial({1, 1});
  const std::complex<double> i(0, 1);
  EXPECT_NEAR(std::abs(eval_complex(f, {i, i}) - std::complex<double>(-1, 0)), 0.0, 1e-15);
  const Poly g = x(2, 0) + Poly::constant(2, Rat(7, 2));
  EXPECT_NEAR(eval_complex(g, {0.0, 0.0}).real(), 3.5, 1e-15);
  EXPECT_THROW(eval_complex(f, {i}), ArityError);
  EXPECT_THROW(eval_complex(f, {i, std::complex<double>(std::nan(""), 0)}), DomainError);
}

TEST(Numpoly, ExampleTwoSixWitnessIsRoot) {
  const Poly lin = x(3, 0) + x(3, 1) + x(3, 2);
  const Poly f = (pow(lin, 3) - Poly::monomial({0, 0, 3})) * Rat(1, 6);
  const auto p = verify::nonstability_witness();
  EXPECT_LE(std::abs(eval_complex(f, p)), 1e-9);
  for (const auto& z : p) EXPECT_GT(z.imag(), 0.0);
}

TEST(Numpoly, ComplexAgreesWithExactAtRationalPoints) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 4);
  for (int t = 0; t < 40; ++t) {
    const Poly f = random_poly(rng, 3, 6, 8);
    std::vector<Rat> pt;
    std::vector<std::complex<double>> cpt;
    for (int k = 0; k < 3; ++k) {
      pt.emplace_back(num(rng), den(rng));
      cpt.emplace_back(to_double(pt.back()), 0.0);
    }
    const double exact = to_double(evaluate(f, pt));
    const double approx = eval_complex(f, cpt).real();
    EXPECT_LE(std::abs(approx - exact), 1e-12 * std::max(1.0, std::abs(exact)));
  }
}

TEST(Numpoly, DerivativeAndCompose) {
  const Poly f = Poly::monomial({3, 1}, Rat(2));
  EXPECT_EQ(derivative(f, ExpVec{2, 1}), Poly::monomial({1, 0}, Rat(12)));
  EXPECT_EQ(derivative(f, std::size_t{1}), Poly::monomial({3, 0}, Rat(2)));
  EXPECT_TRUE(derivative(f, ExpVec{0, 2}).is_zero());
  // f(x1 + x2, x2) in two variables
  const Poly g = compose(Poly::monomial({1, 1}), {x(2, 0) + x(2, 1), x(2, 1)});
  EXPECT_EQ(g, Poly::monomial({1, 1}) + Poly::monomial({0, 2}));
}

TEST(Numpoly, GradedLexSerialization) {
  Poly f(2);
  f.add_term({0, 1}, 1);
  f.add_term({2, 0}, 1);
  f.add_term({1, 1}, Rat(-1, 2));
  f.add_term({0, 0}, 3);
  EXPECT_EQ(to_string(f), "x1^2 - 1/2*x1*x2 + x2 + 3");
}
