#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "scattered/field_tower.hpp"
#include "scattered/number_theory.hpp"

using namespace scattered;

namespace {

std::mt19937_64 rng_for(std::uint64_t salt) { return std::mt19937_64(0xf1e1d + salt); }

Elt nonzero(const TowerCtx& ctx, std::mt19937_64& rng) {
  Elt x;
  do {
    x = ctx.random(rng);
  } while (x.is_zero());
  return x;
}

}  // namespace

TEST(NumberTheory, PrimesAndFactorization) {
  EXPECT_TRUE(nt::is_prime(2));
  EXPECT_TRUE(nt::is_prime(65521));
  EXPECT_FALSE(nt::is_prime(65535));
  EXPECT_TRUE(nt::is_prime(18446744073709551557ull));
  const auto f = nt::factorize(728);  // 3^6 - 1 = 2^3 * 7 * 13
  EXPECT_EQ(f, (std::map<std::uint64_t, unsigned>{{2, 3}, {7, 1}, {13, 1}}));
  std::uint64_t big = 4294967291ull * 4294967279ull;
  const auto g = nt::factorize(big);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(nt::prime_power(16), (std::pair<std::uint64_t, unsigned>{2, 4}));
  EXPECT_FALSE(nt::prime_power(12).has_value());
  EXPECT_FALSE(nt::prime_power(1).has_value());
}

TEST(FieldTower, ModulusIsLeastIrreducible) {
  for (auto [p, d] : {std::pair{2u, 6u}, {3u, 6u}, {2u, 12u}}) {
    const auto mod = detail::least_irreducible(p, d);
    ASSERT_EQ(mod.size(), d + 1);
    EXPECT_TRUE(detail::is_irreducible(p, mod));
    // Nothing smaller in constant-first lex order is irreducible.
    std::vector<std::uint32_t> c(d + 1, 0);
    c[d] = 1;
    for (;;) {
      if (c == mod) break;
      EXPECT_FALSE(detail::is_irreducible(p, c));
      int pos = static_cast<int>(d) - 1;
      while (pos >= 0 && ++c[pos] == p) c[pos--] = 0;
      ASSERT_GE(pos, 0);
    }
  }
}

TEST(FieldTower, IrreducibilityRejectsProducts) {
  // (x^3 + x + 1)^2 over F_2 and x^6 + 1.
  EXPECT_FALSE(detail::is_irreducible(2, std::vector<std::uint32_t>{1, 0, 1, 0, 0, 0, 1}));
  EXPECT_FALSE(detail::is_irreducible(2, std::vector<std::uint32_t>{1, 0, 0, 0, 0, 0, 1}));
  EXPECT_TRUE(detail::is_irreducible(2, std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 1}));
}

TEST(FieldTower, RejectsBadSpecs) {
  EXPECT_THROW(TowerCtx(4, 1), MathError);
  EXPECT_THROW(TowerCtx(2, 0), MathError);
  EXPECT_THROW(TowerCtx(2, 1, {1, 0, 0, 0, 0, 0, 1}), MathError);
  EXPECT_THROW(TowerCtx(2, 1, {1, 1, 0, 1}), MathError);
  EXPECT_THROW(TowerCtx::for_q(6), MathError);
  EXPECT_NO_THROW(TowerCtx(2, 1, {1, 1, 0, 0, 0, 0, 1}));
}

TEST(FieldTower, GeneratorIsPrimitiveAndLeast) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto ctx = TowerCtx::for_q(q);
    const Elt& g = ctx->generator();
    const std::uint64_t order = ctx->field_order() - 1;
    EXPECT_TRUE(ctx->pow(g, order).is_one());
    for (const auto& [ell, m] : nt::factorize(order)) EXPECT_FALSE(ctx->pow(g, order / ell).is_one());
    // Every smaller candidate (same enumeration order) fails primitivity.
    for (std::uint64_t idx = 1;; ++idx) {
      std::vector<std::uint32_t> digits(ctx->degree());
      std::uint64_t v = idx;
      for (int i = static_cast<int>(ctx->degree()) - 1; i >= 0; --i) {
        digits[i] = static_cast<std::uint32_t>(v % ctx->p());
        v /= ctx->p();
      }
      const Elt cand = ctx->from_digits(digits);
      if (cand == g) break;
      bool primitive = true;
      for (const auto& [ell, m] : nt::factorize(order)) primitive &= !ctx->pow(cand, order / ell).is_one();
      EXPECT_FALSE(primitive);
    }
  }
}

TEST(FieldTower, FieldAxiomsOnSamples) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    const auto ctx = TowerCtx::for_q(q);
    auto rng = rng_for(q);
    for (int i = 0; i < 50; ++i) {
      const Elt x = ctx->random(rng), y = ctx->random(rng), z = ctx->random(rng);
      EXPECT_EQ(x + ctx->zero(), x);
      EXPECT_EQ(x * ctx->one(), x);
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x - x, ctx->zero());
      EXPECT_EQ(x + (-x), ctx->zero());
      if (!x.is_zero()) {
        EXPECT_TRUE((x * x.inv()).is_one());
        EXPECT_EQ(y / x * x, y);
        EXPECT_EQ(x.pow_signed(-3) * ctx->pow(x, 3), ctx->one());
      }
    }
    EXPECT_TRUE(ctx->pow(ctx->generator(), ctx->field_order() - 1).is_one());
    EXPECT_THROW(ctx->inv(ctx->zero()), MathError);
    EXPECT_THROW(ctx->div(ctx->one(), ctx->zero()), MathError);
  }
}

TEST(FieldTower, IndexRoundTrip) {
  const auto ctx = TowerCtx::for_q(3);
  for (std::uint64_t i = 0; i < ctx->field_order(); i += 7) EXPECT_EQ(ctx->index_of(ctx->from_index(i)), i);
  EXPECT_THROW(ctx->from_index(ctx->field_order()), MathError);
  EXPECT_EQ(ctx->from_int(-1), -ctx->one());
}

TEST(FieldTower, FrobeniusMatchesPowering) {
  for (std::uint64_t q : {2, 3, 4, 5, 9}) {
    const auto ctx = TowerCtx::for_q(q);
    auto rng = rng_for(100 + q);
    for (int n = 0; n < 20; ++n) {
      const Elt x = ctx->random(rng), y = ctx->random(rng);
      EXPECT_EQ(ctx->frobenius(x, 0), x);
      EXPECT_EQ(ctx->frobenius(x, 6), x);
      EXPECT_EQ(ctx->frobenius_p(x), ctx->pow(x, ctx->p()));
      for (unsigned i = 0; i < 6; ++i) {
        EXPECT_EQ(ctx->frobenius(x, i), oracle::slow_frob(x, i));
        EXPECT_EQ(ctx->frobenius(x + y, i), ctx->frobenius(x, i) + ctx->frobenius(y, i));
        EXPECT_EQ(ctx->frobenius(x * y, i), ctx->frobenius(x, i) * ctx->frobenius(y, i));
        for (unsigned j = 0; j < 6; ++j) {
          EXPECT_EQ(ctx->frobenius(ctx->frobenius(x, i), j), ctx->frobenius(x, i + j));
        }
      }
    }
  }
}

TEST(FieldTower, SubfieldSizes) {
  for (std::uint64_t q : {2, 3}) {
    const auto ctx = TowerCtx::for_q(q);
    std::uint64_t fixed[4] = {};
    for (std::uint64_t i = 0; i < ctx->field_order(); ++i) {
      const Elt x = ctx->from_index(i);
      for (unsigned k : {1u, 2u, 3u}) fixed[k] += ctx->in_subfield(x, k);
    }
    EXPECT_EQ(fixed[1], q);
    EXPECT_EQ(fixed[2], q * q);
    EXPECT_EQ(fixed[3], q * q * q);
    for (unsigned k : {1u, 2u, 3u}) {
      const auto elems = ctx->subfield_elements(k);
      std::set<Elt> uniq(elems.begin(), elems.end());
      EXPECT_EQ(uniq.size(), ctx->q_pow(k));
      for (const auto& x : elems) EXPECT_TRUE(ctx->in_subfield(x, k));
    }
  }
  const auto ctx = TowerCtx::for_q(4);
  EXPECT_TRUE(ctx->in_subfield(ctx->one(), 1));
  EXPECT_FALSE(ctx->in_subfield(ctx->generator(), 1));
  EXPECT_TRUE(ctx->in_subfield(ctx->pow(ctx->generator(), (ctx->field_order() - 1) / (ctx->q() - 1)), 1));
  EXPECT_THROW(ctx->in_subfield(ctx->one(), 4), MathError);
}

TEST(FieldTower, NormAndTrace) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto ctx = TowerCtx::for_q(q);
    auto rng = rng_for(200 + q);
    EXPECT_TRUE(ctx->norm_q6_q3(ctx->zero()).is_zero());
    EXPECT_TRUE(ctx->norm_q6_q3(ctx->one()).is_one());
    for (int n = 0; n < 30; ++n) {
      const Elt x = ctx->random(rng), y = ctx->random(rng);
      EXPECT_TRUE(ctx->in_subfield(ctx->norm_q6_q3(x), 3));
      EXPECT_EQ(ctx->norm_q6_q3(x * y), ctx->norm_q6_q3(x) * ctx->norm_q6_q3(y));
      const Elt n3 = ctx->norm_q6_q3(x);
      EXPECT_TRUE(ctx->in_subfield(ctx->trace_down(n3, TraceTarget::Fq), 1));
    }
    const Elt in_fq = ctx->subfield_elements(1).back();
    EXPECT_EQ(ctx->trace_down(in_fq, TraceTarget::Fq), ctx->from_int(3) * in_fq);
    EXPECT_THROW(ctx->trace_down(ctx->generator(), TraceTarget::Fq), MathError);
    if (ctx->p() == 2) {
      EXPECT_EQ(ctx->trace_down(ctx->one(), TraceTarget::F2), ctx->from_int(3 * ctx->e()));
      EXPECT_TRUE(ctx->trace_down(ctx->zero(), TraceTarget::F2).is_zero());
    } else {
      EXPECT_THROW(ctx->trace_down(ctx->one(), TraceTarget::F2), MathError);
    }
  }
}

TEST(FieldTower, NormFiberRepresentativesCoverF_q3Star) {
  for (std::uint64_t q : {2, 3}) {
    const auto ctx = TowerCtx::for_q(q);
    std::multiset<Elt> fiber;
    for (std::uint64_t k = 0; k + 1 < ctx->q_pow(3); ++k) {
      const auto [b, n] = ctx->norm_fiber_representative(k);
      EXPECT_EQ(n, ctx->norm_q6_q3(b));
      fiber.insert(n);
    }
    EXPECT_EQ(ctx->norm_fiber_representative(0).first, ctx->one());
    const auto image = oracle::brute_norm_image(*ctx);
    const std::set<Elt> distinct(image.begin(), image.end());
    EXPECT_EQ(std::set<Elt>(fiber.begin(), fiber.end()), distinct);
    EXPECT_EQ(fiber.size(), distinct.size());
    for (const auto& n : distinct) EXPECT_EQ(image.count(n), ctx->q_pow(3) + 1);
    EXPECT_THROW(ctx->norm_fiber_representative(ctx->q_pow(3) - 1), MathError);
  }
}

TEST(FieldTower, NormPreimage) {
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    const auto ctx = TowerCtx::for_q(q);
    for (const auto& n : ctx->subfield_elements(3)) {
      if (n.is_zero()) continue;
      EXPECT_EQ(ctx->norm_q6_q3(ctx->norm_preimage(n)), n);
    }
    EXPECT_THROW(ctx->norm_preimage(ctx->zero()), MathError);
  }
}

TEST(FieldTower, SquaresInFq) {
  for (std::uint64_t q : {3, 5, 7, 9}) {
    const auto ctx = TowerCtx::for_q(q);
    std::uint64_t squares = 0;
    std::set<Elt> brute;
    for (const auto& a : ctx->subfield_elements(1)) {
      if (!a.is_zero()) brute.insert(a * a);
    }
    for (const auto& a : ctx->subfield_elements(1)) {
      const bool sq = ctx->is_square_in_fq_star(a);
      squares += sq;
      EXPECT_EQ(sq, brute.contains(a));
    }
    EXPECT_EQ(squares, (q - 1) / 2);
    EXPECT_FALSE(ctx->is_square_in_fq_star(ctx->zero()));
    EXPECT_TRUE(ctx->is_square_in_fq_star(ctx->one()));
    EXPECT_THROW(ctx->is_square_in_fq_star(ctx->generator()), MathError);
  }
  const auto f3 = TowerCtx::for_q(3);
  EXPECT_FALSE(f3->is_square_in_fq_star(f3->from_int(2)));
  const auto f4 = TowerCtx::for_q(4);
  EXPECT_THROW(f4->is_square_in_fq_star(f4->one()), MathError);
}

TEST(FieldTower, PowerClassAgreesWithBruteForce) {
  for (std::uint64_t q : {2, 3}) {
    const auto ctx = TowerCtx::for_q(q);
    const auto powers = oracle::brute_power_class(*ctx);
    for (std::uint64_t i = 0; i < ctx->field_order(); ++i) {
      const Elt t = ctx->from_index(i);
      const bool pc = ctx->power_class_q2q1(t);
      EXPECT_EQ(pc, powers.contains(t));
      if (!t.is_zero()) EXPECT_EQ(pc, ctx->in_subfield(ctx->norm_q6_q3(t), 1));
    }
    const Elt g = ctx->generator();
    EXPECT_TRUE(ctx->power_class_q2q1(ctx->pow(g, q * q + q + 1)));
    EXPECT_FALSE(ctx->power_class_q2q1(g));
  }
}

TEST(FieldTower, SquareRoots) {
  for (std::uint64_t q : {2, 3, 4, 5, 9}) {
    const auto ctx = TowerCtx::for_q(q);
    auto rng = rng_for(300 + q);
    for (int n = 0; n < 40; ++n) {
      const Elt x = ctx->random(rng);
      const auto r = ctx->sqrt(x * x);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(*r * *r, x * x);
    }
    if (ctx->p() != 2) EXPECT_FALSE(ctx->sqrt(ctx->generator()).has_value());
  }
}

TEST(FieldTower, QuadraticsMatchBruteForce) {
  for (std::uint64_t q : {2, 3}) {
    const auto ctx = TowerCtx::for_q(q);
    auto rng = rng_for(400 + q);
    for (int n = 0; n < 100; ++n) {
      const Elt a = nonzero(*ctx, rng);
      Elt b = ctx->random(rng), c = ctx->random(rng);
      if (n % 10 == 0) b = ctx->zero();
      auto want = oracle::brute_roots(a, b, c);
      std::sort(want.begin(), want.end());
      EXPECT_EQ(ctx->solve_quadratic(a, b, c), want);
    }
  }
}

TEST(FieldTower, QuadraticExamples) {
  for (std::uint64_t q : {3, 4, 5, 8}) {
    const auto ctx = TowerCtx::for_q(q);
    const Elt one = ctx->one();
    EXPECT_EQ(ctx->solve_quadratic(one, ctx->zero(), ctx->zero()), std::vector<Elt>{ctx->zero()});
    auto rng = rng_for(500 + q);
    for (int n = 0; n < 20; ++n) {
      const Elt x0 = ctx->random(rng);
      const auto roots = ctx->solve_quadratic(one, -one - x0, x0);
      std::vector<Elt> want{one, x0};
      std::sort(want.begin(), want.end());
      want.erase(std::unique(want.begin(), want.end()), want.end());
      EXPECT_EQ(roots, want);
      const Elt a = nonzero(*ctx, rng), b = ctx->random(rng), c = ctx->random(rng);
      for (const auto& r : ctx->solve_quadratic(a, b, c)) EXPECT_TRUE((a * r * r + b * r + c).is_zero());
    }
    EXPECT_THROW(ctx->solve_quadratic(ctx->zero(), one, one), MathError);
    if (ctx->p() == 2) {
      // Some c has absolute trace 1, and then U^2 + U = c has no root.
      for (std::uint64_t i = 1; i < 64; ++i) {
        const Elt c = ctx->from_index(i);
        Elt tr = ctx->zero(), term = c;
        for (unsigned j = 0; j < ctx->degree(); ++j) {
          tr += term;
          term = term * term;
        }
        EXPECT_EQ(ctx->solve_quadratic(one, one, c).empty(), tr.is_one());
      }
    }
  }
}
