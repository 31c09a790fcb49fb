#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scattered/linearized.hpp"
#include "scattered/scatter_criteria.hpp"

using namespace scattered;

namespace {

LinPoly random_poly(const TowerCtx& ctx, std::mt19937_64& rng) {
  LinPoly f = LinPoly::zero(ctx);
  for (auto& c : f.a) c = ctx.random(rng);
  return f;
}

Grid random_grid(const TowerCtx& ctx, std::mt19937_64& rng, std::size_t n) {
  Grid g(n, n, ctx.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = ctx.random(rng);
  return g;
}

}  // namespace

TEST(Linearized, EvaluateIsFqLinear) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto ctx = TowerCtx::for_q(q);
    std::mt19937_64 rng(11 + q);
    const auto fq = ctx->subfield_elements(1);
    for (int n = 0; n < 30; ++n) {
      const LinPoly f = random_poly(*ctx, rng);
      const Elt x = ctx->random(rng), y = ctx->random(rng);
      const Elt c = fq[rng() % fq.size()];
      EXPECT_EQ(evaluate(f, x + y), evaluate(f, x) + evaluate(f, y));
      EXPECT_EQ(evaluate(f, c * x), c * evaluate(f, x));
    }
  }
}

TEST(Linearized, IdentityAndZero) {
  const auto ctx = TowerCtx::for_q(3);
  std::mt19937_64 rng(3);
  const Elt x = ctx->random(rng);
  EXPECT_EQ(evaluate(LinPoly::identity(*ctx), x), x);
  EXPECT_TRUE(evaluate(LinPoly::zero(*ctx), x).is_zero());
  EXPECT_TRUE(LinPoly::zero(*ctx).is_zero());
  EXPECT_EQ(kernel_dim_dickson(LinPoly::zero(*ctx)), 6);
  EXPECT_EQ(kernel_dim_dickson(LinPoly::identity(*ctx)), 0);
  EXPECT_EQ(kernel_dim_brute(LinPoly::zero(*ctx)), 6);
  const LinPoly f = random_poly(*ctx, rng), g = random_poly(*ctx, rng);
  EXPECT_EQ(evaluate(f + g, x), evaluate(f, x) + evaluate(g, x));
}

TEST(Linearized, DicksonLayout) {
  const auto ctx = TowerCtx::for_q(4);
  std::mt19937_64 rng(5);
  const LinPoly f = random_poly(*ctx, rng);
  const Grid d = dickson(f);
  ASSERT_EQ(d.rows(), 6u);
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = 0; j < 6; ++j) EXPECT_EQ(d(i, j), ctx->frobenius(f.a[(j + 6 - i) % 6], i));
}

TEST(Linearized, DeterminantMatchesCofactorExpansion) {
  for (std::uint64_t q : {2, 3, 4, 7}) {
    const auto ctx = TowerCtx::for_q(q);
    std::mt19937_64 rng(17 + q);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int k = 0; k < 5; ++k) {
        Grid g = random_grid(*ctx, rng, n);
        if (k == 0 && n > 1) {
          for (std::size_t j = 0; j < n; ++j) g(n - 1, j) = g(0, j) + g(0, j);  // dependent rows
        }
        EXPECT_EQ(det(g), oracle::cofactor_det(g));
      }
    }
  }
}

TEST(Linearized, DeterminantRejectsNonSquare) {
  const auto ctx = TowerCtx::for_q(2);
  EXPECT_THROW(det(Grid(2, 3, ctx->one())), MathError);
}

TEST(Linearized, RankOfDicksonIsMapRank) {
  const auto ctx = TowerCtx::for_q(2);
  std::mt19937_64 rng(23);
  for (int dim = 0; dim <= 6; ++dim) {
    const auto [f, achieved] = oracle::subspace_poly(*ctx, rng, dim);
    EXPECT_EQ(rank(dickson(f)), static_cast<std::size_t>(6 - achieved));
  }
}

TEST(Linearized, SubmatrixMr) {
  const auto ctx = TowerCtx::for_q(3);
  std::mt19937_64 rng(29);
  const Grid d = dickson(random_poly(*ctx, rng));
  for (int r = 0; r <= 5; ++r) {
    const Grid m = submatrix_Mr(d, r);
    ASSERT_EQ(m.rows(), static_cast<std::size_t>(6 - r));
    ASSERT_EQ(m.cols(), static_cast<std::size_t>(6 - r));
    for (int i = 0; i < 6 - r; ++i)
      for (int j = 0; j < 6 - r; ++j) EXPECT_EQ(m(i, j), d(i, j + r));
  }
  EXPECT_THROW(submatrix_Mr(d, 6), MathError);
  EXPECT_THROW(submatrix_Mr(d, -1), MathError);
}

TEST(Linearized, KernelDimensionOfSubspacePolynomials) {
  for (std::uint64_t q : {2, 3, 4}) {
    const auto ctx = TowerCtx::for_q(q);
    std::mt19937_64 rng(31 + q);
    for (int dim = 0; dim <= 6; ++dim) {
      for (int n = 0; n < 3; ++n) {
        const auto [f, achieved] = oracle::subspace_poly(*ctx, rng, dim);
        EXPECT_EQ(achieved, dim);
        EXPECT_EQ(kernel_dim_dickson(f), achieved);
        EXPECT_EQ(kernel_dim_brute(f), achieved);
      }
    }
  }
}

TEST(Linearized, KernelDimensionDicksonAgreesWithBrute) {
  for (std::uint64_t q : {2, 3}) {
    const auto ctx = TowerCtx::for_q(q);
    std::mt19937_64 rng(37 + q);
    for (int n = 0; n < 60; ++n) {
      LinPoly f = random_poly(*ctx, rng);
      if (n % 3 == 0) f.a[rng() % 6] = ctx->zero();
      EXPECT_EQ(kernel_dim_dickson(f), kernel_dim_brute(f));
    }
  }
}

TEST(Linearized, BruteKernelRefusesLargeFields) {
  const auto ctx = TowerCtx::for_q(32);
  EXPECT_THROW(kernel_dim_brute(LinPoly::identity(*ctx)), MathError);
}

TEST(Linearized, StandardMaps) {
  for (std::uint64_t q : {2, 3, 4}) {
    const auto ctx = TowerCtx::for_q(q);
    LinPoly frob_minus_id = LinPoly::zero(*ctx);
    frob_minus_id.a[0] = -ctx->one();
    frob_minus_id.a[1] = ctx->one();
    LinPoly trace = LinPoly::zero(*ctx);
    for (auto& c : trace.a) c = ctx->one();
    for (const auto& x : ctx->subfield_elements(1)) EXPECT_TRUE(evaluate(frob_minus_id, x).is_zero());
    EXPECT_EQ(kernel_dim_dickson(frob_minus_id), 1);
    EXPECT_EQ(kernel_dim_brute(frob_minus_id), 1);
    EXPECT_EQ(kernel_dim_dickson(trace), 5);
    EXPECT_EQ(kernel_dim_brute(trace), 5);
    std::mt19937_64 rng(41);
    EXPECT_TRUE(ctx->in_subfield(evaluate(trace, ctx->random(rng)), 1));
    EXPECT_EQ(dickson(LinPoly::identity(*ctx)), [&] {
      Grid id(6, 6, ctx->zero());
      for (int i = 0; i < 6; ++i) id(i, i) = ctx->one();
      return id;
    }());
  }
}

TEST(Linearized, DeterminantExamples) {
  const auto ctx = TowerCtx::for_q(5);
  std::mt19937_64 rng(43);
  Grid id(6, 6, ctx->zero());
  for (int i = 0; i < 6; ++i) id(i, i) = ctx->one();
  EXPECT_TRUE(det(id).is_one());
  Grid g = random_grid(*ctx, rng, 6);
  for (int j = 0; j < 6; ++j) g(4, j) = g(1, j);
  EXPECT_TRUE(det(g).is_zero());
  for (int n = 0; n < 200; ++n) {
    const Grid h = random_grid(*ctx, rng, 6);
    ASSERT_EQ(det(h), oracle::cofactor_det(h));
  }
}

TEST(Linearized, DicksonIsAdditive) {
  const auto ctx = TowerCtx::for_q(3);
  std::mt19937_64 rng(47);
  for (int n = 0; n < 20; ++n) {
    const LinPoly f = random_poly(*ctx, rng), g = random_poly(*ctx, rng);
    const Grid df = dickson(f), dg = dickson(g), dfg = dickson(f + g);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) EXPECT_EQ(dfg(i, j), df(i, j) + dg(i, j));
    // Row i is the Frobenius twist of row i - 1 shifted right by one.
    for (int i = 1; i < 6; ++i)
      for (int j = 0; j < 6; ++j) EXPECT_EQ(df(i, j), ctx->frobenius(df(i - 1, (j + 5) % 6), 1));
  }
}

TEST(Linearized, DicksonOfRmb) {
  for (std::uint64_t q : {3, 4}) {
    const auto ctx = TowerCtx::for_q(q);
    std::mt19937_64 rng(53 + q);
    for (int n = 0; n < 20; ++n) {
      const Elt m = ctx->random(rng), b = ctx->random(rng);
      const Grid d = dickson(r_poly(m, b));
      const Elt z = ctx->zero(), one = ctx->one();
      const std::array<Elt, 6> row0{m, b, z, z, one, z};
      const std::array<Elt, 6> row5{ctx->frobenius(b, 5), z, z, one, z, ctx->frobenius(m, 5)};
      for (int j = 0; j < 6; ++j) {
        EXPECT_EQ(d(0, j), row0[j]);
        EXPECT_EQ(d(5, j), row5[j]);
      }
      // The contiguous 4x4 top-right block depends on m; the m-free minor on
      // rows {0,1,2,4} and the last four columns is b^{q^2} (N-1)^q.
      EXPECT_EQ(det(submatrix_Mr(d, 2)), ctx->frobenius(m, 2) * ctx->frobenius(m, 3));
      const Elt nm1 = ctx->norm_q6_q3(b) - one;
      Grid minor(4, 4, z);
      const std::array<int, 4> rows{0, 1, 2, 4};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) minor(i, j) = d(rows[i], j + 2);
      EXPECT_EQ(det(minor), ctx->frobenius(b, 2) * ctx->frobenius(nm1, 1));
      EXPECT_EQ(submatrix_Mr(d, 0), d);
      EXPECT_EQ(submatrix_Mr(d, 5)(0, 0), d(0, 5));
    }
  }
}
