#include <gtest/gtest.h>

#include "exform/subspace.hpp"
#include "exform/wedge_solver.hpp"
#include "oracles.hpp"

namespace exform {
namespace {

using testing::random_sparse_form;

ExtForm a(int n, std::vector<int> idx, long c = 1) {
  return make_form(n, static_cast<int>(idx.size()), {{idx, Rational(c)}});
}
Vector e(int n, int i) { return basis_vector(n, i); }
Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Rational dot(const Vector& x, const Vector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Subspace random_subspace(int n, CounterRng& rng) {
  const int p = static_cast<int>(rng.uniform(0, n - 1));
  for (;;) {
    std::vector<Vector> basis;
    for (int i = 0; i < p; ++i) {
      Vector v(n);
      for (auto& x : v) x = rng.uniform(-2, 2);
      basis.push_back(v);
    }
    try {
      return Subspace(n, basis);
    } catch (const std::invalid_argument&) {
    }
  }
}

TEST(Subspace, RejectsDependentBasis) {
  EXPECT_THROW(Subspace(3, {vec({1, 1, 0}), vec({2, 2, 0})}), std::invalid_argument);
  EXPECT_THROW(Subspace(3, {vec({1, 1})}), std::invalid_argument);
  Subspace c(3, {vec({1, 1, 0})});
  EXPECT_TRUE(c.contains(vec({-2, -2, 0})));
  EXPECT_FALSE(c.contains(vec({1, 0, 0})));
}

TEST(Annihilator, CoordinateSubspace) {
  auto ann = annihilator(Subspace(4, {e(4, 1), e(4, 2)}));
  ASSERT_EQ(ann.size(), 2u);
  EXPECT_EQ(ann[0], e(4, 3));
  EXPECT_EQ(ann[1], e(4, 4));
}

TEST(Annihilator, DiagonalLine) {
  Subspace c(3, {vec({1, 1, 0})});
  auto ann = annihilator(c);
  ASSERT_EQ(ann.size(), 2u);
  for (const auto& cov : ann) EXPECT_EQ(dot(cov, vec({1, 1, 0})), 0);
  EXPECT_EQ(rank(RationalMatrix([&] {
              RationalMatrix m(2, 3);
              for (int r = 0; r < 2; ++r) for (int col = 0; col < 3; ++col) m(r, col) = ann[r][col];
              return m;
            }())),
            2u);
}

TEST(Annihilator, ZeroSubspaceGivesDualBasis) {
  auto ann = annihilator(Subspace::zero(3));
  ASSERT_EQ(ann.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(ann[i], e(3, i + 1));
}

TEST(Annihilator, RandomSubspacesByEvaluation) {
  CounterRng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 7));
    Subspace c = random_subspace(n, rng);
    auto ann = annihilator(c);
    EXPECT_EQ(static_cast<int>(ann.size()), n - c.dim());
    for (const auto& cov : ann)
      for (const auto& v : c.basis()) EXPECT_EQ(dot(cov, v), 0);
  }
}

void expect_dual(const AdaptedFrame& f) {
  const int n = f.ambient_dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      EXPECT_EQ(dot(f.covectors()[i], f.dual_vector(j)), i == j ? 1 : 0);
    }
  }
}

TEST(AdaptedCobase, CoordinateSubspace) {
  AdaptedFrame f = adapted_cobase(Subspace(4, {e(4, 3), e(4, 4)}));
  EXPECT_EQ(f.vectors()[0], e(4, 3));
  EXPECT_EQ(f.vectors()[1], e(4, 4));
  EXPECT_EQ(f.covectors()[0], e(4, 1));
  EXPECT_EQ(f.covectors()[1], e(4, 2));
  EXPECT_EQ(f.covectors()[2], e(4, 3));
  EXPECT_EQ(f.covectors()[3], e(4, 4));
  expect_dual(f);
}

TEST(AdaptedCobase, DiagonalLineAndZero) {
  expect_dual(adapted_cobase(Subspace(3, {vec({1, 1, 0})})));
  AdaptedFrame z = adapted_cobase(Subspace::zero(3));
  EXPECT_EQ(z.annihilator_dim(), 3);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(z.covectors()[i], e(3, i + 1));
}

TEST(AdaptedCobase, RandomDualityAndBlocks) {
  CounterRng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 7));
    Subspace c = random_subspace(n, rng);
    AdaptedFrame f = adapted_cobase(c);
    expect_dual(f);
    for (int i = 0; i < f.annihilator_dim(); ++i)
      for (const auto& v : c.basis()) EXPECT_EQ(dot(f.covectors()[i], v), 0);
    ExtForm omega = random_sparse_form(n, static_cast<int>(rng.uniform(0, n)), rng);
    EXPECT_EQ(f.from_frame(f.to_frame(omega)), omega);
  }
}

TEST(Decompose, SingleTerm) {
  Decomposition d = decompose(a(4, {1, 3}), adapted_cobase(Subspace(4, {e(4, 1), e(4, 2)})));
  ASSERT_EQ(d.parts.size(), 1u);
  EXPECT_EQ(d.main_degree(), 1);
}

TEST(Decompose, TwoParts) {
  Decomposition d = decompose(a(4, {3, 4}) + a(4, {1, 2}), adapted_cobase(Subspace(4, {e(4, 1), e(4, 2)})));
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.parts[0].s, 0);
  EXPECT_EQ(d.parts[0].form, a(4, {1, 2}));
  EXPECT_EQ(d.parts[1].s, 2);
  EXPECT_EQ(d.parts[1].form, a(4, {3, 4}));
}

TEST(Decompose, RewrittenInFrame) {
  ExtForm omega = wedge(a(5, {1, 2}), a(5, {3}) + a(5, {4}));
  Decomposition d = decompose(omega, adapted_cobase(Subspace(5, {e(5, 4), e(5, 5)})));
  ExtForm sum(5, 3);
  for (const auto& part : d.parts) sum += part.form;
  EXPECT_EQ(sum, omega);
  EXPECT_EQ(d.main_degree(), 2);
}

TEST(Decompose, RejectsZero) {
  EXPECT_THROW(decompose(ExtForm(4, 2), adapted_cobase(Subspace::zero(4))), std::invalid_argument);
  EXPECT_THROW(main_part(ExtForm(4, 2), Subspace::zero(4)), std::invalid_argument);
}

TEST(Decompose, RandomReconstructionAndBlockCounts) {
  CounterRng rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 8));
    Subspace c = random_subspace(n, rng);
    ExtForm omega = random_sparse_form(n, static_cast<int>(rng.uniform(0, n)), rng);
    if (omega.is_zero()) continue;
    Decomposition d = decompose(omega, adapted_cobase(c));
    ExtForm sum(n, omega.degree());
    const int k = d.frame.annihilator_dim();
    int last = -1;
    for (const auto& part : d.parts) {
      EXPECT_GT(part.s, last);
      last = part.s;
      for (const auto& [mask, value] : part.framed.terms()) {
        EXPECT_EQ(std::popcount(mask & ((std::uint64_t{1} << k) - 1)), part.s);
      }
      sum += part.form;
    }
    EXPECT_EQ(sum, omega);
  }
}

TEST(MainPart, Examples) {
  Subspace c(4, {e(4, 1), e(4, 2)});
  EXPECT_EQ(main_part(a(4, {3}), c), std::make_pair(a(4, {3}), 1));
  EXPECT_EQ(main_part(a(4, {1, 2}), c), std::make_pair(a(4, {1, 2}), 0));
  ExtForm omega = a(4, {1, 2}) + a(4, {3, 4});
  EXPECT_EQ(main_part(omega, kernel2(omega)).second, 2);
}

// The contraction route and the frame route must agree.
TEST(MainPart, FastRouteMatchesFrameRoute) {
  CounterRng rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 7));
    Subspace c = random_subspace(n, rng);
    ExtForm omega = random_sparse_form(n, static_cast<int>(rng.uniform(0, n)), rng);
    if (omega.is_zero()) continue;
    EXPECT_EQ(main_degree(omega, c), main_part(omega, c).second) << "trial " << trial;
  }
}

// Block-triangular change: new C basis mixes only C vectors; completion vectors
// pick up arbitrary C components.
TEST(MainPart, InvariantUnderFrameChange) {
  CounterRng rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 7));
    Subspace c = random_subspace(n, rng);
    const int p = c.dim();
    ExtForm omega = random_sparse_form(n, static_cast<int>(rng.uniform(1, n)), rng);
    if (omega.is_zero()) continue;
    AdaptedFrame base = adapted_cobase(c);
    auto mix = random_invertible(std::max(p, 1), rng);
    std::vector<Vector> vectors;
    for (int i = 0; i < p; ++i) {
      Vector v(n);
      for (int j = 0; j < p; ++j)
        for (int t = 0; t < n; ++t) v[t] += mix[i][j] * base.vectors()[j][t];
      vectors.push_back(v);
    }
    for (int i = p; i < n; ++i) {
      Vector v = base.vectors()[i];
      for (int j = 0; j < p; ++j) {
        Rational f = rng.uniform(-2, 2);
        for (int t = 0; t < n; ++t) v[t] += f * base.vectors()[j][t];
      }
      vectors.push_back(v);
    }
    AdaptedFrame changed(vectors, p);
    EXPECT_EQ(decompose(omega, changed).main_degree(), decompose(omega, base).main_degree());
  }
}

TEST(ExtractDerivative, Examples) {
  Subspace c(4, {e(4, 1), e(4, 2)});
  Derivative d1 = extract_derivative(a(4, {1, 3}), c);
  ASSERT_EQ(d1.vectors.size(), 1u);
  EXPECT_EQ(d1.vectors[0], e(4, 1));
  EXPECT_EQ(d1.result, a(4, {3}));

  Derivative d2 = extract_derivative(a(4, {1, 2}), c);
  ASSERT_EQ(d2.vectors.size(), 2u);
  EXPECT_EQ(d2.result.degree(), 0);
  EXPECT_FALSE(d2.result.is_zero());

  Derivative d3 = extract_derivative(a(4, {3, 4}), c);
  EXPECT_TRUE(d3.vectors.empty());
  EXPECT_EQ(d3.result, a(4, {3, 4}));

  EXPECT_THROW(extract_derivative(ExtForm(4, 2), c), std::invalid_argument);
}

bool only_annihilator_factors(const ExtForm& form, const AdaptedFrame& frame) {
  const std::uint64_t block = (std::uint64_t{1} << frame.annihilator_dim()) - 1;
  const ExtForm framed = frame.to_frame(form);
  for (const auto& [mask, value] : framed.terms()) {
    if ((mask & ~block) != 0) return false;
  }
  return true;
}

TEST(ExtractDerivative, PostconditionsAndExhaustiveSearch) {
  CounterRng rng(36);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 7));
    Subspace c = random_subspace(n, rng);
    ExtForm omega = random_sparse_form(n, static_cast<int>(rng.uniform(0, n)), rng);
    if (omega.is_zero()) continue;
    AdaptedFrame frame = adapted_cobase(c);
    const int s = decompose(omega, frame).main_degree();
    Derivative d = extract_derivative(omega, c);
    EXPECT_FALSE(d.result.is_zero());
    EXPECT_EQ(d.result.degree(), s);
    EXPECT_TRUE(only_annihilator_factors(d.result, frame));
    for (const auto& v : c.basis()) EXPECT_TRUE(interior(v, d.result).is_zero());

    // Exhaustive: contract step by step with every j-subset of C's basis.
    const int j = omega.degree() - s;
    bool found = j == 0;
    if (j > 0) {
      for (auto mask : lex_subsets(c.dim(), j)) {
        ExtForm current = omega;
        auto idx = MultiIndex(mask).indices();
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) current = interior(c.basis()[*it - 1], current);
        if (!current.is_zero() && only_annihilator_factors(current, frame)) found = true;
      }
    }
    EXPECT_TRUE(found);
  }
}

}  // namespace
}  // namespace exform
