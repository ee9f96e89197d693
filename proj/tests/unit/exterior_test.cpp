#include <gtest/gtest.h>

#include "exform/exterior.hpp"
#include "oracles.hpp"

namespace exform {
namespace {

using testing::antisymmetrized_value;
using testing::random_sparse_form;
using testing::random_vector;

ExtForm a(int n, std::vector<int> idx, long c = 1) {
  return make_form(n, static_cast<int>(idx.size()), {{idx, Rational(c)}});
}

Vector e(int n, int i) { return basis_vector(n, i); }

TEST(MakeForm, BuildsCanonicalTerms) {
  ExtForm omega = make_form(4, 2, {{{1, 2}, 1}, {{3, 4}, 1}});
  EXPECT_EQ(omega.size(), 2u);
  EXPECT_EQ(omega.coefficient(MultiIndex::from_indices({3, 4}, 4).bits()), 1);
}

TEST(MakeForm, CancellingTermsGiveZero) {
  EXPECT_TRUE(make_form(4, 2, {{{1, 2}, 1}, {{1, 2}, -1}}).is_zero());
}

TEST(MakeForm, RejectsBadInput) {
  EXPECT_THROW(make_form(3, 4, {{{1, 2, 3, 4}, 1}}), DimensionError);
  EXPECT_THROW(make_form(4, 2, {{{2, 1}, 1}}), DimensionError);
  EXPECT_THROW(make_form(4, 2, {{{1, 1}, 1}}), DimensionError);
  EXPECT_THROW(make_form(4, 2, {{{1}, 1}}), DimensionError);
}

TEST(Wedge, SignBookkeeping) {
  EXPECT_EQ(wedge(a(4, {1, 2}), a(4, {3, 4})), a(4, {1, 2, 3, 4}));
  EXPECT_EQ(wedge(a(4, {3}), a(4, {1, 2})), a(4, {1, 2, 3}));
  EXPECT_EQ(wedge(a(4, {2}), a(4, {1})), a(4, {1, 2}, -1));
  ExtForm omega = a(4, {1, 2}) + a(4, {3, 4});
  EXPECT_EQ(wedge(omega, omega), a(4, {1, 2, 3, 4}, 2));
}

TEST(Wedge, ScalarActsByMultiplication) {
  ExtForm c = ExtForm::constant(4, Rational(3));
  EXPECT_EQ(wedge(c, a(4, {1, 3})), a(4, {1, 3}, 3));
}

TEST(Wedge, DimensionMismatchThrows) { EXPECT_THROW(wedge(a(3, {1}), a(4, {1})), DimensionError); }

TEST(Wedge, GradedAnticommutativeAndAssociative) {
  CounterRng rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 8));
    const int p = static_cast<int>(rng.uniform(0, n));
    const int q = static_cast<int>(rng.uniform(0, n - p));
    const int r = static_cast<int>(rng.uniform(0, n - p - q));
    ExtForm a = random_sparse_form(n, p, rng);
    ExtForm b = random_sparse_form(n, q, rng);
    ExtForm c = random_sparse_form(n, r, rng);
    ExtForm ba = wedge(b, a);
    if ((p * q) % 2) ba = -ba;
    EXPECT_EQ(wedge(a, b), ba);
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
    ExtForm b2 = random_sparse_form(n, q, rng);
    EXPECT_EQ(wedge(a, b + b2), wedge(a, b) + wedge(a, b2));
  }
}

TEST(Evaluate, NormalizationIsDeterminantOverFactorial) {
  EXPECT_EQ(evaluate(a(4, {1, 2}), {e(4, 1), e(4, 2)}), Rational(1, 2));
  EXPECT_EQ(antisymmetrized_value(a(4, {1, 2}), {e(4, 1), e(4, 2)}), Rational(1, 2));
  EXPECT_EQ(evaluate(a(4, {1, 2}), {e(4, 1), e(4, 1)}), 0);
  EXPECT_EQ(evaluate(a(4, {1}), {e(4, 1)}), 1);
  EXPECT_THROW(evaluate(a(4, {1, 2}), {e(4, 1)}), DimensionError);
}

TEST(Evaluate, AgreesWithAntisymmetrizationOnRandomInputs) {
  CounterRng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 5));
    const int k = static_cast<int>(rng.uniform(1, std::min(n, 4)));
    ExtForm theta = random_sparse_form(n, k, rng);
    std::vector<Vector> args;
    for (int i = 0; i < k; ++i) args.push_back(random_vector(n, rng));
    EXPECT_EQ(evaluate(theta, args), antisymmetrized_value(theta, args));
  }
}

TEST(Interior, Examples) {
  EXPECT_EQ(interior(e(4, 1), a(4, {1, 2})), a(4, {2}));
  EXPECT_TRUE(interior(e(4, 3), a(4, {1, 2})).is_zero());
  EXPECT_EQ(interior(e(4, 1), a(4, {1})), ExtForm::constant(4, Rational(1)));
  EXPECT_THROW(interior(e(3, 1), a(4, {1})), DimensionError);
}

// Coefficient of iota_v theta at e_J is deg(theta) * (k-1)! * theta(v, e_J) = k! theta(v, e_J).
TEST(Interior, MatchesDegreeWeightedEvaluation) {
  CounterRng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 5));
    const int k = static_cast<int>(rng.uniform(1, std::min(n, 4)));
    ExtForm theta = random_sparse_form(n, k, rng);
    Vector v = random_vector(n, rng);
    ExtForm contracted = interior(v, theta);
    mpz_class fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    for (auto mask : lex_subsets(n, k - 1)) {
      std::vector<Vector> args{v};
      for (int i : MultiIndex(mask).indices()) args.push_back(e(n, i));
      EXPECT_EQ(contracted.coefficient(mask), fact * antisymmetrized_value(theta, args));
    }
  }
}

TEST(Interior, AntiderivationAndNilpotence) {
  CounterRng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 8));
    const int p = static_cast<int>(rng.uniform(1, n / 2));
    const int q = static_cast<int>(rng.uniform(1, n - p));
    ExtForm mu = random_sparse_form(n, p, rng);
    ExtForm nu = random_sparse_form(n, q, rng);
    Vector x = random_vector(n, rng);
    ExtForm second = wedge(mu, interior(x, nu));
    if (p % 2) second = -second;
    EXPECT_EQ(interior(x, wedge(mu, nu)), wedge(interior(x, mu), nu) + second) << "trial " << trial;
    EXPECT_TRUE(interior(x, interior(x, mu)).is_zero());
  }
}

TEST(IteratedInterior, OrderAndSign) {
  EXPECT_EQ(iterated_interior({e(4, 1), e(4, 2)}, a(4, {1, 2})), ExtForm::constant(4, Rational(-1)));
  EXPECT_EQ(iterated_interior({e(4, 2), e(4, 1)}, a(4, {1, 2})), ExtForm::constant(4, Rational(1)));
  EXPECT_TRUE(iterated_interior({e(4, 1), e(4, 1)}, a(4, {1, 2})).is_zero());
  // Over-contraction is the zero scalar.
  ExtForm over = iterated_interior({e(4, 1), e(4, 2)}, a(4, {1}));
  EXPECT_TRUE(over.is_zero());
  EXPECT_EQ(over.degree(), 0);
}

TEST(IteratedInterior, StepByStepOracle) {
  ExtForm theta = a(4, {1, 2});
  ExtForm step = interior(e(4, 1), interior(e(4, 2), theta));
  EXPECT_EQ(iterated_interior({e(4, 1), e(4, 2)}, theta), step);
}

TEST(IteratedInterior, PermutationSign) {
  CounterRng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.uniform(3, 6));
    ExtForm theta = random_sparse_form(n, 3, rng);
    std::vector<Vector> vs{random_vector(n, rng), random_vector(n, rng), random_vector(n, rng)};
    std::vector<int> perm{0, 1, 2};
    ExtForm base = iterated_interior(vs, theta);
    do {
      std::vector<Vector> permuted{vs[perm[0]], vs[perm[1]], vs[perm[2]]};
      ExtForm expect = base.scaled(Rational(testing::permutation_sign(perm)));
      EXPECT_EQ(iterated_interior(permuted, theta), expect);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing({e(4, 1), e(4, 2)}, a(4, {1, 2})), -1);
  EXPECT_EQ(pairing({e(4, 1), e(4, 2), e(4, 3)}, a(4, {1, 2, 3})), -1);
  EXPECT_EQ(pairing({e(4, 2), e(4, 1)}, a(4, {1, 2})), 1);
  EXPECT_THROW(pairing({e(4, 1)}, a(4, {1, 2})), DimensionError);
}

TEST(Pairing, ReverseSignTimesFactorialTimesEvaluation) {
  CounterRng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 6));
    const int k = static_cast<int>(rng.uniform(0, std::min(n, 4)));
    ExtForm theta = random_sparse_form(n, k, rng);
    std::vector<Vector> vs;
    for (int i = 0; i < k; ++i) vs.push_back(random_vector(n, rng));
    mpz_class fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    EXPECT_EQ(pairing(vs, theta), reverse_sign(k) * fact * antisymmetrized_value(theta, vs));
  }
}

TEST(Pairing, DecomposableIsSignedDeterminant) {
  CounterRng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 6));
    const int k = static_cast<int>(rng.uniform(1, std::min(n, 4)));
    std::vector<Vector> etas;
    std::vector<Vector> xs;
    ExtForm theta = ExtForm::constant(n, Rational(1));
    for (int i = 0; i < k; ++i) {
      etas.push_back(random_vector(n, rng));
      xs.push_back(random_vector(n, rng));
      theta = wedge(theta, covector_form(etas.back()));
    }
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        Rational s = 0;
        for (int c = 0; c < n; ++c) s += etas[i][c] * xs[j][c];
        m[i][j] = s;
      }
    }
    EXPECT_EQ(pairing(xs, theta), reverse_sign(k) * testing::leibniz_det(m));
  }
}

// Coefficients are recovered from pairings with basis tuples, so pairing is non-degenerate.
TEST(Pairing, ReconstructsCoefficients) {
  CounterRng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 7));
    const int k = static_cast<int>(rng.uniform(0, std::min(n, 4)));
    ExtForm theta = random_sparse_form(n, k, rng);
    ExtForm rebuilt(n, k);
    for (auto mask : lex_subsets(n, k)) {
      std::vector<Vector> vs;
      for (int i : MultiIndex(mask).indices()) vs.push_back(e(n, i));
      rebuilt.add_term(mask, reverse_sign(k) * pairing(vs, theta));
    }
    EXPECT_EQ(rebuilt, theta);
  }
}

TEST(InteriorDivision, Examples) {
  EXPECT_EQ(interior_division(e(4, 1), a(4, {2})), a(4, {1, 2}));
  ExtForm zero_div = interior_division(e(4, 1), ExtForm(4, 1));
  EXPECT_TRUE(zero_div.is_zero());
  EXPECT_EQ(zero_div.degree(), 2);
  EXPECT_THROW(interior_division(e(4, 1), a(4, {1})), std::invalid_argument);
  EXPECT_THROW(interior_division(Vector(4, Rational(0)), a(4, {2})), std::invalid_argument);
}

TEST(InteriorDivision, RoundTrip) {
  CounterRng rng(18);
  int exercised = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 7));
    const int k = static_cast<int>(rng.uniform(1, n - 1));
    Vector x = random_vector(n, rng);
    if (std::all_of(x.begin(), x.end(), [](const Rational& c) { return sgn(c) == 0; })) continue;
    // iota_x(iota_x theta) = 0, so mu = iota_x theta satisfies the precondition.
    ExtForm mu = interior(x, random_sparse_form(n, k + 1, rng));
    ExtForm nu = interior_division(x, mu);
    EXPECT_EQ(nu.degree(), mu.degree() + 1);
    EXPECT_EQ(interior(x, nu), mu);
    ++exercised;
  }
  EXPECT_GT(exercised, 150);
}

TEST(MultiIndexOrder, LexicographicOnEqualSizes) {
  auto subsets = lex_subsets(5, 3);
  ASSERT_EQ(subsets.size(), 10u);
  for (std::size_t i = 1; i < subsets.size(); ++i) {
    EXPECT_TRUE(LexLess{}(subsets[i - 1], subsets[i]));
    EXPECT_LT(MultiIndex(subsets[i - 1]).indices(), MultiIndex(subsets[i]).indices());
  }
}

}  // namespace
}  // namespace exform
