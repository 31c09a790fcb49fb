#include "scattered/census.hpp"

#include "scattered/number_theory.hpp"
#include "scattered/parallel.hpp"
#include "scattered/scatter_criteria.hpp"

namespace scattered {

std::uint64_t conjecture_value(std::uint64_t q) {
  if (!nt::prime_power(q)) throw MathError(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  const std::uint64_t lhs = (q * q + q + 1) * (q - 2);
  if (lhs != q * q * q - q * q - q - 2) throw MathError(ErrorKind::OracleDisagreement, "floor identity failed");
  return lhs / 2;
}

std::uint64_t gamma_closed_form(std::uint64_t q) {
  if (!nt::prime_power(q)) throw MathError(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  const std::uint64_t cube = q * q * q;
  return q % 2 == 1 ? (cube - q * q - q - 3) / 2 : (cube - q * q - q - 2) / 2;
}

unsigned gcd_e2(std::uint64_t q) {
  const auto pe = nt::prime_power(q);
  if (!pe || pe->first != 2) throw MathError(ErrorKind::EvenCharRequired, "gcd(e, 2) is defined for q = 2^e");
  return pe->second % 2 == 0 ? 2 : 1;
}

bool CubicReport::all_match() const {
  for (const auto& e : expected) {
    if (!e.match()) return false;
  }
  for (const auto& e : consistency) {
    if (!e.match()) return false;
  }
  return true;
}

GammaReport enumerate_gamma(const TowerCtx& ctx, bool oracle, unsigned workers) {
  if (oracle && ctx.q() > 5) throw MathError(ErrorKind::EnumerationTooLarge, "oracle mode needs q <= 5");
  GammaReport report;
  report.field_spec = ctx.spec();
  report.parity = ctx.parity();
  report.q = ctx.q();
  report.oracle_checked = oracle;

  const std::uint64_t count = ctx.q_pow(3) - 1;
  std::vector<char> keep(count, 0);
  std::vector<Elt> norms(count);
  parallel_chunks(count, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    Elt b = ctx.pow(ctx.generator(), begin);
    for (std::uint64_t k = begin; k < end; ++k) {
      const ScatterVerdict closed = is_scattered(b);
      if (oracle) {
        const ScatterVerdict brute = brute_is_scattered(b, 1);
        if (brute.scattered != closed.scattered) {
          std::string digits;
          for (auto d : ctx.to_digits(b)) digits += std::to_string(d) + ",";
          throw MathError(ErrorKind::OracleDisagreement, "criterion and oracle disagree at b = [" + digits + "]");
        }
      }
      keep[k] = closed.scattered ? 1 : 0;
      norms[k] = closed.N;
      b *= ctx.generator();
    }
  });
  for (std::uint64_t k = 0; k < count; ++k) {
    if (keep[k]) report.gamma.push_back(norms[k]);
  }
  report.size = report.gamma.size();
  report.conjecture_value = conjecture_value(report.q);
  report.closed_form_value = gamma_closed_form(report.q);
  report.matches_conjecture = report.size == report.conjecture_value;
  report.matches_closed_form = report.size == report.closed_form_value;
  return report;
}

namespace {

// Star condition on (S, R, P) for the given characteristic; both use the sign
// convention of their own cubic (T^3 - S T^2 + R T - P odd, all plus even).
bool star_odd(const TowerCtx& ctx, const Elt& s, const Elt& r, const Elt& p) {
  const Elt d = (s - p) * (s - p) + ctx.from_int(8) * p - ctx.from_int(4) * r;
  return ctx.is_square_in_fq_star(d);
}

bool star_even(const TowerCtx& ctx, const Elt& s, const Elt& r, const Elt& p) {
  if (p == s) return false;
  const Elt sp = p + s;
  const Elt c = r * (s + p + r + ctx.one()) / (sp * sp);
  return ctx.trace_fq_to_f2(c).is_zero();
}

struct RootShape {
  unsigned distinct = 0;
  bool triple = false;
};

// Roots of T^3 + c2 T^2 + c1 T + c0 over F_q.
RootShape classify(const std::vector<Elt>& fq, const Elt& c2, const Elt& c1, const Elt& c0) {
  RootShape shape;
  Elt last;
  for (const auto& t : fq) {
    if ((((t + c2) * t + c1) * t + c0).is_zero()) {
      ++shape.distinct;
      last = t;
    }
  }
  if (shape.distinct == 1) {
    const TowerCtx& ctx = *c2.ctx();
    // (T - r)^3 = T^3 - 3r T^2 + 3r^2 T - r^3
    const Elt three = ctx.from_int(3);
    shape.triple = c2 == -three * last && c1 == three * last * last && c0 == -(last * last * last);
  }
  return shape;
}

CubicReport run_census(const TowerCtx& ctx, Parity parity) {
  CubicReport rep;
  rep.q = ctx.q();
  rep.parity = parity;
  const std::vector<Elt> fq = ctx.subfield_elements(1);
  const std::vector<Elt> fq2 = ctx.subfield_elements(2);
  const bool odd = parity == Parity::Odd;
  auto star = [&](const Elt& s, const Elt& r, const Elt& p) {
    return odd ? star_odd(ctx, s, r, p) : star_even(ctx, s, r, p);
  };

  std::uint64_t zero_root_direct = 0;
  for (const auto& s : fq) {
    for (const auto& r : fq) {
      for (const auto& p : fq) {
        if (!star(s, r, p)) continue;
        ++rep.total;
        const RootShape shape = odd ? classify(fq, -s, r, -p) : classify(fq, s, r, p);
        ++rep.gamma[shape.distinct];
        rep.rooted_pairs += shape.distinct;
        if (shape.triple) ++rep.triple_root_count;
        if (shape.distinct == 2) ++rep.double_root_count;
        if (shape.distinct == 0) ++zero_root_direct;
      }
    }
  }
  rep.gamma_size = 3 * rep.gamma[0] + rep.triple_root_count;

  // (T - A)(T - B)(T - B^q) with A in F_q, B in F_{q^2}; for q even only B outside F_q.
  std::uint64_t pairs_b_in_fq = 0, pairs_b_outside = 0;
  for (const auto& a : fq) {
    for (const auto& b : fq2) {
      const bool b_in_fq = ctx.in_subfield(b, 1);
      if (!odd && b_in_fq) continue;
      const Elt bq = ctx.frobenius(b, 1);
      const Elt s = a + b + bq;
      const Elt r = a * b + a * bq + b * bq;
      const Elt p = a * b * bq;
      if (!star(s, r, p)) continue;
      if (b_in_fq) {
        ++pairs_b_in_fq;
      } else {
        ++pairs_b_outside;
      }
    }
  }
  rep.conjroot_pairs = pairs_b_in_fq + pairs_b_outside;
  rep.conjroot_polynomials = pairs_b_in_fq + pairs_b_outside / 2;

  const auto q = static_cast<std::int64_t>(rep.q);
  const auto q2 = q * q, q3 = q2 * q;
  auto i64 = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };
  const std::int64_t sum_gamma = i64(rep.gamma[1] + rep.gamma[2] + rep.gamma[3]);
  rep.consistency.push_back({"gamma1+2gamma2+3gamma3", i64(rep.rooted_pairs),
                             i64(rep.gamma[1] + 2 * rep.gamma[2] + 3 * rep.gamma[3])});
  rep.consistency.push_back({"gamma0_direct", i64(rep.total) - sum_gamma, i64(zero_root_direct)});

  if (odd) {
    const std::int64_t a2 = i64(pairs_b_in_fq);
    const std::int64_t a1 = i64(pairs_b_outside / 2);
    const std::int64_t delta = i64(rep.triple_root_count);
    rep.expected.push_back({"total", (q3 - q2) / 2, i64(rep.total)});
    rep.expected.push_back({"rooted_pairs", (q2 - q) * (q + 1) / 2, i64(rep.rooted_pairs)});
    rep.expected.push_back({"conjroot_pairs", (q3 - 2 * q2 + 2 * q + 3) / 2, i64(rep.conjroot_pairs)});
    rep.expected.push_back({"3gamma0+delta_q", (q3 - q2 - q - 3) / 2, i64(rep.gamma_size)});
    rep.consistency.push_back({"gamma1=A1+delta_q", a1 + delta, i64(rep.gamma[1])});
    rep.consistency.push_back({"gamma2=A2-delta_q", a2 - delta, i64(rep.gamma[2])});
    rep.consistency.push_back({"conjroot_pairs_even", 0, i64(pairs_b_outside % 2)});
  } else {
    const std::int64_t g = gcd_e2(rep.q);
    rep.expected.push_back({"total", (q3 - q2) / 2, i64(rep.total)});
    rep.expected.push_back({"rooted_pairs", (q3 - q) / 2, i64(rep.rooted_pairs)});
    rep.expected.push_back({"conjroot_polynomials", (q3 - 3 * q2 + 4 * q) / 4, i64(rep.conjroot_polynomials)});
    rep.expected.push_back({"triple_root", (q - 2 * g) / 2, i64(rep.triple_root_count)});
    rep.expected.push_back({"double_root", (q2 - 3 * q + 2 + 2 * g) / 2, i64(rep.double_root_count)});
    rep.expected.push_back({"gamma3", (q3 - q2 + 4 * q - 4 * g - 8) / 12, i64(rep.gamma[3])});
    rep.expected.push_back({"gamma0", (q3 - q2 - 2 * q + 2 * g - 2) / 6, i64(rep.gamma[0])});
    rep.expected.push_back({"3gamma0+triple", (q3 - q2 - q - 2) / 2, i64(rep.gamma_size)});
    rep.consistency.push_back({"gamma1=polys+triple", i64(rep.conjroot_polynomials + rep.triple_root_count),
                               i64(rep.gamma[1])});
    rep.consistency.push_back({"gamma2=double", i64(rep.double_root_count), i64(rep.gamma[2])});
    rep.consistency.push_back({"conjroot_pairs_even", 0, i64(pairs_b_outside % 2)});
  }
  return rep;
}

}  // namespace

CubicReport star_census_odd(const TowerCtx& ctx) {
  if (ctx.parity() != Parity::Odd) throw MathError(ErrorKind::OddCharRequired, "odd census needs q odd");
  return run_census(ctx, Parity::Odd);
}

CubicReport star_census_odd(std::uint64_t q) { return star_census_odd(*TowerCtx::for_q(q)); }

CubicReport star_census_even(const TowerCtx& ctx) {
  if (ctx.parity() != Parity::Even) throw MathError(ErrorKind::EvenCharRequired, "even census needs q even");
  return run_census(ctx, Parity::Even);
}

CubicReport star_census_even(std::uint64_t q) { return star_census_even(*TowerCtx::for_q(q)); }

LemmaFFResult lemma_ff_count(const Elt& alpha, const Elt& beta, const Elt& gamma) {
  const TowerCtx& ctx = *alpha.ctx();
  if (ctx.parity() != Parity::Even) throw MathError(ErrorKind::EvenCharRequired, "lemma_ff_count needs q even");
  for (const Elt* v : {&alpha, &beta, &gamma}) {
    if (!ctx.in_subfield(*v, 1)) throw MathError(ErrorKind::NotInSubfield, "alpha, beta, gamma must lie in F_q");
  }
  if (alpha.is_zero()) throw MathError(ErrorKind::ConstraintViolated, "alpha must be nonzero");
  const Elt one = ctx.one();
  if (alpha * (beta * beta + one) == (gamma + beta) * (gamma + one)) {
    throw MathError(ErrorKind::ConstraintViolated, "alpha(beta^2+1) = (gamma+beta)(gamma+1)");
  }
  LemmaFFResult res;
  const std::vector<Elt> fq = ctx.subfield_elements(1);
  for (const auto& x : fq) {
    if (x == gamma) continue;
    const Elt rhs = alpha * (x + one) * (x + beta) / (x * x + gamma * gamma);
    for (const auto& y : fq) {
      if (y * y + y == rhs) ++res.count;
    }
  }
  res.trace_alpha_one = !ctx.trace_fq_to_f2(alpha).is_zero();
  res.expected = res.trace_alpha_one ? ctx.q() : ctx.q() - 2;
  return res;
}

BasicMultiplierReport basic_multiplier_check(const TowerCtx& ctx) {
  if (ctx.parity() != Parity::Odd) throw MathError(ErrorKind::OddCharRequired, "basic_multiplier_check needs q odd");
  if (ctx.q() > 9) throw MathError(ErrorKind::EnumerationTooLarge, "basic_multiplier_check needs q <= 9");
  BasicMultiplierReport rep;
  for (const auto& n : ctx.subfield_elements(3)) {
    if (ctx.in_subfield(n, 1)) continue;
    if (ctx.is_square_in_fq_star(delta_from_norm(n))) ++rep.square_norms_outside_fq;
  }
  const std::vector<Elt> fq = ctx.subfield_elements(1);
  for (const auto& s : fq) {
    for (const auto& r : fq) {
      for (const auto& p : fq) {
        if (!star_odd(ctx, s, r, p)) continue;
        bool has_root = false;
        for (const auto& t : fq) {
          if ((((t - s) * t + r) * t - p).is_zero()) {
            has_root = true;
            break;
          }
        }
        if (!has_root) ++rep.irreducible_star_cubics;
      }
    }
  }
  return rep;
}

}  // namespace scattered
