#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hyperprob/errors.hpp"
#include "hyperprob/interference.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace hyperprob;
using hyperprob::testing::exact_sqrt;
using hyperprob::testing::hyp8;
using hyperprob::testing::random_hyperbolic_space;
using hyperprob::testing::random_space;
using hyperprob::testing::Rational;

TEST(Lambda, Hyp8ContextCIsExactlyNineEighths) {
  // Rational oracle from the atom weights (in hundredths).
  const Rational pc = Rational(20, 100);
  const Rational pa1 = Rational(10, 100) / pc, pa2 = Rational(10, 100) / pc;
  const Rational pb1 = Rational(19, 100) / pc;
  const Rational p11 = Rational(40, 100) / Rational(50, 100);
  const Rational p21 = Rational(10, 100) / Rational(50, 100);
  const Rational radical = exact_sqrt(pa1 * p11 * pa2 * p21);
  const Rational lambda1 = (pb1 - (pa1 * p11 + pa2 * p21)) / (Rational(2) * radical);
  EXPECT_EQ(lambda1, Rational(9, 8));

  const auto lambda = lambda_coefficients(hyp8().context_stats("C"));
  EXPECT_NEAR(lambda[0], lambda1.value(), 1e-12);
  EXPECT_NEAR(lambda[1], -lambda1.value(), 1e-12);
}

TEST(Lambda, OmegaAndD) {
  const auto space = hyp8();
  const auto omega = lambda_coefficients(space.context_stats("OMEGA"));
  EXPECT_NEAR(omega[0], 0.0, 1e-12);
  EXPECT_NEAR(omega[1], 0.0, 1e-12);
  const auto d = lambda_coefficients(space.context_stats("D"));
  const double expected = (19.0 / 30.0 - 0.6) / (2.0 * std::sqrt(2.0 / 9.0 * 0.16));
  EXPECT_NEAR(d[0], expected, 1e-12);
  EXPECT_NEAR(d[0], 0.08839, 1e-5);
  EXPECT_EQ(classify(d), ContextClass::trigonometric);
}

TEST(Lambda, ZeroRadicalIsReported) {
  ContextStatistics s;
  s.p_a = {1.0, 0.0};
  s.p_b = {0.5, 0.5};
  s.transition = {{{0.5, 0.5}, {0.5, 0.5}}};
  try {
    lambda_coefficients(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDenominator);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify({1.125, -1.125}), ContextClass::hyperbolic);
  EXPECT_EQ(classify({0.0, 0.0}), ContextClass::classical);
  EXPECT_EQ(classify({1.0, -1.0}), ContextClass::boundary);
  EXPECT_EQ(classify({1.0, 0.4}), ContextClass::boundary);
  EXPECT_EQ(classify({0.3, -0.9}), ContextClass::trigonometric);
  EXPECT_EQ(classify({1.2, 0.5}), ContextClass::mixed);
  EXPECT_EQ(classify({1.0 + 5e-10, -1.0}), ContextClass::boundary);
}

TEST(Classify, SwapInvariant) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const double a = hyperprob::testing::uniform(rng, -2.5, 2.5);
    const double b = hyperprob::testing::uniform(rng, -2.5, 2.5);
    EXPECT_EQ(classify({a, b}), classify({b, a}));
  }
}

TEST(Phases, Hyperbolic) {
  const auto p = phases({1.125, -1.125});
  EXPECT_EQ(p.epsilon[0], 1);
  EXPECT_EQ(p.epsilon[1], -1);
  const double expected = std::log(1.125 + std::sqrt(0.265625));
  EXPECT_NEAR(p.theta[0], expected, 1e-15);
  EXPECT_NEAR(p.theta[1], expected, 1e-15);
  EXPECT_NEAR(p.theta[0], 0.49493, 5e-6);
  EXPECT_TRUE(p.hyperbolic_branch[0]);
  EXPECT_TRUE(p.in_hyperbolic_family());
}

TEST(Phases, ClassicalAndBoundary) {
  const auto c = phases({0.0, 0.0});
  EXPECT_EQ(c.context_class, ContextClass::classical);
  EXPECT_DOUBLE_EQ(c.theta[0], std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(c.theta[1], std::numbers::pi / 2);
  EXPECT_EQ(c.epsilon[0], 1);
  EXPECT_FALSE(c.hyperbolic_branch[0]);

  const auto b = phases({1.0, -1.0});
  EXPECT_EQ(b.context_class, ContextClass::boundary);
  EXPECT_EQ(b.theta[0], 0.0);
  EXPECT_EQ(b.theta[1], 0.0);
  EXPECT_EQ(b.epsilon[1], -1);
  EXPECT_TRUE(b.in_hyperbolic_family());
}

TEST(Phases, MixedIsUnsupported) {
  try {
    phases({1.2, 0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedClassUnsupported);
  }
}

TEST(Reconstruct, Examples) {
  const auto space = hyp8();
  for (const char* name : {"C", "OMEGA", "D", "B1", "B2"}) {
    const auto s = space.context_stats(name);
    const auto r = reconstruct_total_probability(s, phases(lambda_coefficients(s)));
    EXPECT_NEAR(r[0], s.p_b[0], 1e-12) << name;
    EXPECT_NEAR(r[1], s.p_b[1], 1e-12) << name;
  }
  const auto d = space.context_stats("D");
  const double lam = (19.0 / 30.0 - 0.6) / (2.0 * std::sqrt(2.0 / 9.0 * 0.16));
  EXPECT_NEAR(0.6 + 2.0 * std::cos(std::acos(lam)) * std::sqrt(2.0 / 9.0 * 0.16),
              19.0 / 30.0, 1e-12);
  const auto rd = reconstruct_total_probability(d, phases(lambda_coefficients(d)));
  EXPECT_NEAR(rd[0], 19.0 / 30.0, 1e-12);
}

TEST(Balance, Examples) {
  const auto space = hyp8();
  const auto c = space.context_stats("C");
  EXPECT_NEAR(balance_check(c, lambda_coefficients(c)), 0.0, 1e-15);
  const auto o = space.context_stats("OMEGA");
  EXPECT_NEAR(balance_check(o, lambda_coefficients(o)), 0.0, 1e-15);
}

TEST(BasicContexts, Hyp8IsOnTheBoundary) {
  const auto space = hyp8();
  for (const char* name : {"B1", "B2"}) {
    const auto lambda = lambda_coefficients(space.context_stats(name));
    EXPECT_NEAR(std::abs(lambda[0]), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(lambda[1]), 1.0, 1e-12);
    EXPECT_EQ(classify(lambda), ContextClass::boundary);
  }
  const auto b1 = lambda_coefficients(space.context_stats("B1"));
  EXPECT_NEAR(b1[0], 1.0, 1e-12);
  EXPECT_NEAR(b1[1], -1.0, 1e-12);
}

TEST(BasicContexts, NonUniformMarginalsAreStrictlyHyperbolic) {
  using A = AOutcome;
  using B = BOutcome;
  using hyperprob::testing::atom;
  // a-marginal (0.7, 0.3), transition [[0.8, 0.2], [0.2, 0.8]];
  // lambda(b1 | B1) = 1 / (2 sqrt(0.7 * 0.3)).
  const FiniteContextSpace space(
      {atom("p", 0.56, A::a1, B::b1), atom("q", 0.14, A::a1, B::b2),
       atom("r", 0.06, A::a2, B::b1), atom("s", 0.24, A::a2, B::b2)},
      {});
  const auto lambda = lambda_coefficients(space.context_stats("B1"));
  EXPECT_NEAR(lambda[0], 1.0 / (2.0 * std::sqrt(0.21)), 1e-12);
  EXPECT_GT(lambda[0], 1.0 + 1e-6);
  EXPECT_EQ(classify(lambda), ContextClass::hyperbolic);
}

TEST(BasicContexts, LawNeedsDoubleStochasticTransitions) {
  using A = AOutcome;
  using B = BOutcome;
  using hyperprob::testing::atom;
  // Transition [[5/6, 1/6], [1/4, 3/4]]: lambda(b1 | B1) drops below one.
  const FiniteContextSpace space(
      {atom("p", 0.5, A::a1, B::b1), atom("q", 0.1, A::a1, B::b2),
       atom("r", 0.1, A::a2, B::b1), atom("s", 0.3, A::a2, B::b2)},
      {});
  ASSERT_FALSE(is_double_stochastic(space.transition()));
  const double q1 = 0.6, q2 = 0.4, p11 = 5.0 / 6.0, p12 = 1.0 / 6.0, p21 = 0.25, p22 = 0.75;
  const double expected =
      (q1 * p11 * p12 + q2 * p21 * p22) / (2.0 * p11 * p21 * std::sqrt(q1 * q2));
  const auto lambda = lambda_coefficients(space.context_stats("B1"));
  EXPECT_NEAR(lambda[0], expected, 1e-12);
  EXPECT_LT(lambda[0], 1.0);
}

class RandomCorpus : public ::testing::Test {
 protected:
  std::mt19937_64 rng{99};
};

TEST_F(RandomCorpus, BalanceSignsAndSymmetry) {
  int hyperbolic_seen = 0;
  for (int i = 0; i < 400; ++i) {
    const bool ds = i % 2 == 0;
    const auto space = i % 4 < 2 ? random_space(rng, ds) : random_hyperbolic_space(rng, ds);
    for (const auto& name : space.all_context_names()) {
      const Event c = space.context(name);
      if (space.prob(c) <= 0.0 || !space.is_nondegenerate(c)) continue;
      const auto s = space.context_stats(name);
      const auto lambda = lambda_coefficients(s);
      EXPECT_LE(std::abs(balance_check(s, lambda)), 1e-10);
      const auto cls = classify(lambda);
      if (cls == ContextClass::hyperbolic) {
        ++hyperbolic_seen;
        const auto p = phases(lambda);
        EXPECT_EQ(p.epsilon[0] + p.epsilon[1], 0);
      }
      if (ds) EXPECT_NEAR(std::abs(lambda[0]), std::abs(lambda[1]), 1e-10);
      if (ds && (name == "B1" || name == "B2")) {
        const std::size_t x = name == "B1" ? 0 : 1;
        EXPECT_GE(lambda[x], 1.0 - 1e-10);
      }
      if (cls != ContextClass::mixed) {
        const auto r = reconstruct_total_probability(s, phases(lambda));
        EXPECT_NEAR(r[0], s.p_b[0], 1e-10);
        EXPECT_NEAR(r[1], s.p_b[1], 1e-10);
      }
    }
  }
  EXPECT_GT(hyperbolic_seen, 100);
}

TEST(SignOf, ZeroIsPositive) {
  EXPECT_EQ(sign_of(0.0), 1);
  EXPECT_EQ(sign_of(-0.0), 1);
  EXPECT_EQ(sign_of(-3.0), -1);
}

}  // namespace
