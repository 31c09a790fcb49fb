#include "scattered/equiv_mrd.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "scattered/linearized.hpp"
#include "scattered/parallel.hpp"
#include "scattered/scatter_criteria.hpp"

namespace scattered {

namespace {

void require_pair(const Elt& b, const Elt& c) {
  if (b.is_zero() || c.is_zero()) throw MathError(ErrorKind::ZeroB, "b and c must be nonzero");
  const TowerCtx& ctx = *b.ctx();
  if (ctx.norm_q6_q3(b).is_one() || ctx.norm_q6_q3(c).is_one()) {
    throw MathError(ErrorKind::NormOne, "norm 1 gives a non-scattered subspace");
  }
}

int codeword_rank(const Elt& a, const Elt& beta, const Elt& b) {
  const TowerCtx& ctx = *b.ctx();
  LinPoly h = LinPoly::zero(ctx);
  h.a[0] = a;
  h.a[1] = beta * b;
  h.a[4] = beta;
  return 6 - kernel_dim_dickson(h);
}

}  // namespace

bool gl_equivalent(const Elt& b, const Elt& c) {
  require_pair(b, c);
  const TowerCtx& ctx = *b.ctx();
  return ctx.norm_q6_q3(b) == ctx.norm_q6_q3(c);
}

bool gammal_equivalent(const Elt& b, const Elt& c) {
  require_pair(b, c);
  const TowerCtx& ctx = *b.ctx();
  const Elt nb = ctx.norm_q6_q3(b);
  Elt nc = ctx.norm_q6_q3(c);
  for (unsigned j = 0; j < 3 * ctx.e(); ++j) {
    if (nb == nc) return true;
    nc = ctx.frobenius_p(nc);
  }
  return false;
}

OrbitReport frobenius_orbits(const TowerCtx& ctx, const std::vector<Elt>& gamma) {
  std::unordered_set<Elt, EltHash> members(gamma.begin(), gamma.end());
  std::unordered_set<Elt, EltHash> seen;
  OrbitReport rep;
  rep.gamma_size = members.size();
  rep.bound_denominator = 3 * ctx.e();
  rep.orbit_sizes_divide = true;
  for (const auto& n : gamma) {
    if (n.is_zero() || !ctx.in_subfield(n, 3)) {
      throw MathError(ErrorKind::NotInSubfield, "gamma must be a subset of F_{q^3}^*");
    }
    if (seen.contains(n)) continue;
    std::vector<Elt> orbit;
    Elt cur = n;
    do {
      if (!members.contains(cur)) throw MathError(ErrorKind::NotClosed, "a Frobenius image left gamma");
      orbit.push_back(cur);
      seen.insert(cur);
      cur = ctx.frobenius_p(cur);
    } while (cur != n);
    if (rep.bound_denominator % orbit.size() != 0) rep.orbit_sizes_divide = false;
    rep.orbits.push_back(std::move(orbit));
  }
  rep.orbit_count = rep.orbits.size();
  rep.frobenius_closed = true;
  return rep;
}

MrdReport mrd_check(const Elt& b, bool exhaustive, std::uint64_t sample_size, std::uint64_t seed, unsigned workers) {
  if (b.is_zero()) throw MathError(ErrorKind::ZeroB, "b must be nonzero");
  const TowerCtx& ctx = *b.ctx();
  const std::uint64_t order = ctx.field_order();
  if (exhaustive && (order > kMrdExhaustiveLimit || order * order > kMrdExhaustiveLimit)) {
    throw MathError(ErrorKind::TooLargeForExhaustive, "exhaustive MRD check needs q^12 <= 2^22");
  }
  MrdReport rep;
  rep.b = b;
  rep.scattered = is_scattered(b).scattered;
  rep.code_dimension_over_fp = 12 * ctx.e();
  rep.exhaustive = exhaustive;

  std::mutex merge;
  auto absorb = [&](const std::map<int, std::uint64_t>& local) {
    std::lock_guard lock(merge);
    for (const auto& [r, c] : local) rep.rank_distribution[r] += c;
  };

  if (exhaustive) {
    // Codeword (a, beta) has index a_index + q^6 * beta_index.
    parallel_chunks(order * order, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
      std::map<int, std::uint64_t> local;
      for (std::uint64_t i = begin; i < end; ++i) {
        ++local[codeword_rank(ctx.from_index(i % order), ctx.from_index(i / order), b)];
      }
      absorb(local);
    });
  } else {
    const Elt zero = ctx.zero();
    parallel_chunks(order, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
      std::map<int, std::uint64_t> local;
      for (std::uint64_t i = begin; i < end; ++i) ++local[codeword_rank(ctx.from_index(i), zero, b)];
      absorb(local);
    });
    // Draw the sample serially so the report does not depend on the worker count.
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Elt, Elt>> sample;
    sample.reserve(sample_size);
    while (sample.size() < sample_size) {
      Elt a = ctx.random(rng);
      Elt beta = ctx.random(rng);
      if (beta.is_zero()) continue;
      sample.emplace_back(a, beta);
    }
    parallel_chunks(sample.size(), workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
      std::map<int, std::uint64_t> local;
      for (std::uint64_t i = begin; i < end; ++i) ++local[codeword_rank(sample[i].first, sample[i].second, b)];
      absorb(local);
    });
    rep.sample_size = sample_size;
  }

  rep.min_rank = 7;
  for (const auto& [r, c] : rep.rank_distribution) {
    rep.codewords_checked += c;
    if (r > 0) rep.min_rank = std::min(rep.min_rank, r);
  }
  // Only the zero codeword may have rank 0; anything else there means min rank 0.
  if (rep.rank_distribution.count(0) && rep.rank_distribution.at(0) > 1) rep.min_rank = 0;
  rep.is_mrd = rep.min_rank == 5;
  return rep;
}

}  // namespace scattered
