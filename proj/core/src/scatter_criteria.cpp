#include "scattered/scatter_criteria.hpp"

#include <atomic>
#include <limits>

#include "scattered/parallel.hpp"

namespace scattered {

std::string_view to_string(Route route) {
  switch (route) {
    case Route::Oracle: return "oracle";
    case Route::ClosedFormOdd: return "closed_form_odd";
    case Route::ClosedFormEven: return "closed_form_even";
  }
  return "unknown";
}

std::string_view to_string(RootBranch branch) {
  switch (branch) {
    case RootBranch::OddDeltaZero: return "delta_zero";
    case RootBranch::OddDeltaSquareNInFq: return "delta_square_N_in_Fq";
    case RootBranch::OddDeltaSquareNNotInFq: return "delta_square_N_not_in_Fq";
    case RootBranch::OddDeltaNonsquare: return "delta_nonsquare";
    case RootBranch::EvenBZero: return "B_zero";
    case RootBranch::EvenNInFq: return "N_in_Fq";
    case RootBranch::EvenNNotInFqTraceOne: return "N_not_in_Fq_trace_one";
    case RootBranch::EvenNNotInFqTraceZero: return "N_not_in_Fq_trace_zero";
  }
  return "unknown";
}

bool branch_roots_are_powers(RootBranch branch) {
  return branch != RootBranch::OddDeltaSquareNNotInFq && branch != RootBranch::EvenNNotInFqTraceZero;
}

LinPoly r_poly(const Elt& m, const Elt& b) {
  const TowerCtx& ctx = *b.ctx();
  LinPoly f = LinPoly::zero(ctx);
  f.a[0] = m;
  f.a[1] = b;
  f.a[4] = ctx.one();
  return f;
}

namespace {

void require_nonzero_b(const Elt& b) {
  if (b.is_zero()) throw MathError(ErrorKind::ZeroB, "b must be nonzero");
}

bool large_kernel(const Elt& m, const Elt& b) { return kernel_dim_dickson(r_poly(m, b)) >= 2; }

void require_norm_domain(const TowerCtx& ctx, const Elt& n) {
  if (!ctx.in_subfield(n, 3)) throw MathError(ErrorKind::NotInSubfield, "N must lie in F_{q^3}");
}

}  // namespace

ScatterVerdict brute_is_scattered(const Elt& b, unsigned workers) {
  require_nonzero_b(b);
  const TowerCtx& ctx = *b.ctx();
  if (ctx.field_order() > kBruteEnumerationLimit) {
    throw MathError(ErrorKind::EnumerationTooLarge, "brute scatter check needs q^6 <= 2^24");
  }
  ScatterVerdict verdict;
  verdict.route = Route::Oracle;
  verdict.N = ctx.norm_q6_q3(b);

  const std::uint64_t units = ctx.field_order() - 1;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  parallel_chunks(units, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    Elt m = ctx.pow(ctx.generator(), begin);
    for (std::uint64_t k = begin; k < end; ++k) {
      if (k >= best.load(std::memory_order_relaxed)) return;
      if (large_kernel(m, b)) {
        std::uint64_t cur = best.load();
        while (k < cur && !best.compare_exchange_weak(cur, k)) {
        }
        return;
      }
      m *= ctx.generator();
    }
  });

  if (best.load() != kNone) {
    verdict.scattered = false;
    verdict.witness_m = ctx.pow(ctx.generator(), best.load());
  } else if (large_kernel(ctx.zero(), b)) {
    verdict.scattered = false;
    verdict.witness_m = ctx.zero();
  } else {
    verdict.scattered = true;
  }
  return verdict;
}

Elt norm_q3_q(const Elt& n) {
  const TowerCtx& ctx = *n.ctx();
  return n * ctx.frobenius(n, 1) * ctx.frobenius(n, 2);
}

PhiQuadratic phi_b(const Elt& b) {
  require_nonzero_b(b);
  const TowerCtx& ctx = *b.ctx();
  PhiQuadratic phi;
  phi.parity = ctx.parity();
  phi.N = ctx.norm_q6_q3(b);
  const Elt& n = phi.N;
  const Elt nq = ctx.frobenius(n, 1);
  const Elt nq2 = ctx.frobenius(n, 2);
  const Elt one = ctx.one();
  phi.A = b * ctx.frobenius(b, 1);
  const Elt a_q3 = ctx.frobenius(phi.A, 3);
  if (phi.parity == Parity::Odd) {
    phi.B = -norm_q3_q(n) + ctx.from_int(2) * n * nq - n - nq + nq2;
    phi.C = -a_q3 * norm_q3_q(n - one);
    phi.delta_b = phi.B * phi.B - ctx.from_int(4) * phi.A * phi.C;
  } else {
    phi.B = norm_q3_q(n) + n + nq + nq2;
    phi.C = a_q3 * norm_q3_q(n + one);
    if (!phi.B.is_zero()) phi.ac_over_b2 = phi.A * phi.C / (phi.B * phi.B);
  }
  return phi;
}

Elt delta_from_norm(const Elt& n) {
  const TowerCtx& ctx = *n.ctx();
  const Elt nq = ctx.frobenius(n, 1);
  const Elt nq2 = ctx.frobenius(n, 2);
  const Elt full = n * nq * nq2;
  const Elt head = full - n - nq - nq2;
  return head * head + ctx.from_int(8) * full - ctx.from_int(4) * (n * nq + n * nq2 + nq * nq2);
}

Elt trace_ac_over_b2_from_norm(const Elt& n) {
  const TowerCtx& ctx = *n.ctx();
  const Elt nq = ctx.frobenius(n, 1);
  const Elt nq2 = ctx.frobenius(n, 2);
  const Elt full = n * nq * nq2;
  const Elt pairs = n * nq + n * nq2 + nq * nq2;
  const Elt b = full + n + nq + nq2;
  if (b.is_zero()) throw MathError(ErrorKind::DivisionByZero, "B vanishes at this N");
  return pairs * (n + nq + nq2 + pairs + full + ctx.one()) / (b * b);
}

bool criterion_odd(const Elt& n) {
  const TowerCtx& ctx = *n.ctx();
  if (ctx.parity() != Parity::Odd) throw MathError(ErrorKind::OddCharRequired, "criterion_odd needs q odd");
  require_norm_domain(ctx, n);
  if (n.is_zero()) throw MathError(ErrorKind::ZeroInput, "N must be nonzero");
  if (n.is_one()) return false;
  return ctx.is_square_in_fq_star(delta_from_norm(n));
}

bool criterion_even(const Elt& n) {
  const TowerCtx& ctx = *n.ctx();
  if (ctx.parity() != Parity::Even) throw MathError(ErrorKind::EvenCharRequired, "criterion_even needs q even");
  require_norm_domain(ctx, n);
  if (n.is_zero() || n.is_one()) return false;
  const Elt nq = ctx.frobenius(n, 1);
  const Elt nq2 = ctx.frobenius(n, 2);
  if ((n * nq * nq2 + n + nq + nq2).is_zero()) return false;
  return ctx.trace_fq_to_f2(trace_ac_over_b2_from_norm(n)).is_zero();
}

ScatterVerdict is_scattered(const Elt& b) {
  require_nonzero_b(b);
  const TowerCtx& ctx = *b.ctx();
  ScatterVerdict verdict;
  verdict.N = ctx.norm_q6_q3(b);
  if (ctx.parity() == Parity::Odd) {
    verdict.route = Route::ClosedFormOdd;
    verdict.scattered = criterion_odd(verdict.N);
  } else {
    verdict.route = Route::ClosedFormEven;
    verdict.scattered = criterion_even(verdict.N);
  }
  return verdict;
}

RootPowerStatus root_power_status(const Elt& b) {
  const PhiQuadratic phi = phi_b(b);
  const TowerCtx& ctx = *b.ctx();
  RootPowerStatus status;
  const bool n_in_fq = ctx.in_subfield(phi.N, 1);
  if (phi.parity == Parity::Odd) {
    const Elt& delta = *phi.delta_b;
    if (delta.is_zero()) {
      status.branch = RootBranch::OddDeltaZero;
    } else if (ctx.is_square_in_fq_star(delta)) {
      status.branch = n_in_fq ? RootBranch::OddDeltaSquareNInFq : RootBranch::OddDeltaSquareNNotInFq;
    } else {
      status.branch = RootBranch::OddDeltaNonsquare;
    }
  } else {
    if (phi.B.is_zero()) {
      status.branch = RootBranch::EvenBZero;
    } else if (n_in_fq) {
      status.branch = RootBranch::EvenNInFq;
    } else {
      const bool trace_one = !ctx.trace_down(*phi.ac_over_b2, TraceTarget::F2).is_zero();
      status.branch = trace_one ? RootBranch::EvenNNotInFqTraceOne : RootBranch::EvenNNotInFqTraceZero;
    }
  }
  status.roots = ctx.solve_quadratic(phi.A, phi.B, phi.C);
  status.all_roots_are_powers = true;
  for (const auto& r : status.roots) {
    if (!ctx.power_class_q2q1(r)) status.all_roots_are_powers = false;
  }
  return status;
}

bool mainlemma_check(const Elt& b, unsigned workers) {
  require_nonzero_b(b);
  const TowerCtx& ctx = *b.ctx();
  if (ctx.norm_q6_q3(b).is_one()) throw MathError(ErrorKind::PreconditionUnmet, "N = 1");
  if (brute_is_scattered(b, workers).scattered) {
    throw MathError(ErrorKind::PreconditionUnmet, "U_b is scattered");
  }
  const PhiQuadratic phi = phi_b(b);
  for (const auto& r : ctx.solve_quadratic(phi.A, phi.B, phi.C)) {
    if (!r.is_zero() && ctx.power_class_q2q1(r)) return true;
  }
  return false;
}

std::optional<bool> root_relation_check(const Elt& b) {
  const TowerCtx& ctx = *b.ctx();
  if (ctx.parity() != Parity::Even) return std::nullopt;
  const PhiQuadratic phi = phi_b(b);
  if (!phi.ac_over_b2) return std::nullopt;
  if (ctx.trace_down(*phi.ac_over_b2, TraceTarget::F2).is_zero()) return std::nullopt;
  const Elt b_q4 = ctx.frobenius(b, 4);
  const Elt lin = b_q4 / b;
  const Elt shift = ctx.frobenius(b, 2) / b * ctx.pow(phi.N + ctx.one(), ctx.q() + 1);
  for (const auto& t : ctx.solve_quadratic(ctx.frobenius(phi.A, 4), ctx.frobenius(phi.B, 4),
                                           ctx.frobenius(phi.C, 4))) {
    if (ctx.frobenius(t, 1) != lin * t + shift) return false;
  }
  return true;
}

SubstitutionCheck substitution_identities_check(const Elt& m, const Elt& b) {
  if (m.is_zero() || b.is_zero()) throw MathError(ErrorKind::ZeroInput, "m and b must be nonzero");
  const TowerCtx& ctx = *b.ctx();
  std::array<Elt, 6> bq, tq;
  const Elt t = ctx.frobenius(m, 3) * ctx.frobenius(m, 4) * ctx.frobenius(m, 5);
  for (unsigned i = 0; i < 6; ++i) {
    bq[i] = ctx.frobenius(b, i);
    tq[i] = ctx.frobenius(t, i);
  }
  const Elt t54 = tq[5] * tq[4];

  Elt g = bq[1] * bq[0] * t54 * tq[0];
  g -= bq[4] * bq[1] * t54;
  g += bq[5] * bq[0] * t54 * tq[5];
  g += bq[5] * bq[4] * t54 * tq[4];
  g -= bq[3] * bq[0] * t54;
  g += bq[4] * bq[3] * t54 * tq[3];
  g += bq[4] * bq[3] * bq[1] * bq[0] * t54;
  g -= bq[5] * bq[2] * t54;
  g += bq[5] * bq[4] * bq[2] * bq[1] * t54;
  g += bq[2] * bq[1] * t54 * tq[1];
  g += bq[3] * bq[2] * tq[2] * tq[4] * tq[5];
  g += bq[5] * bq[3] * bq[2] * bq[0] * t54;
  g -= bq[5] * bq[4] * bq[3] * bq[2] * bq[1] * bq[0] * t54;
  g += tq[4] * tq[4] * tq[0];
  g += t54;
  g += tq[5] * tq[5] * tq[3];
  g += t54 * tq[3] * tq[0];
  g = g / t54;

  const Elt f0 = -(bq[4] * bq[2] * bq[1]) - bq[3] * bq[2] * bq[0] + bq[4] * bq[3] * bq[2] * bq[1] * bq[0] -
                 bq[4] * tq[4] + bq[2] - bq[0] * tq[5];

  const Grid dm = dickson(r_poly(m, b));
  SubstitutionCheck check;
  check.det_m0 = det(dm) == g;
  check.det_m1 = det(submatrix_Mr(dm, 1)) == f0;
  check.root_relation = root_relation_check(b);
  return check;
}

}  // namespace scattered
