#ifndef SCATTERED_EQUIV_MRD_HPP
#define SCATTERED_EQUIV_MRD_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "scattered/field_tower.hpp"

namespace scattered {

/// U_b and U_c are GL(2,q^6)-equivalent: equal norms. Both norms must differ from 1.
bool gl_equivalent(const Elt& b, const Elt& c);

/// U_b and U_c are GammaL(2,q^6)-equivalent: N(b) = N(c)^{p^j} for some j < 3e.
bool gammal_equivalent(const Elt& b, const Elt& c);

struct OrbitReport {
  /// Orbits of N -> N^p, each listed from its first member in gamma order.
  std::vector<std::vector<Elt>> orbits;
  std::uint64_t gamma_size = 0;
  std::uint64_t orbit_count = 0;
  /// The lower bound is gamma_size / bound_denominator, with denominator 3e.
  std::uint64_t bound_denominator = 0;
  bool frobenius_closed = false;
  bool orbit_sizes_divide = false;

  double lower_bound() const { return static_cast<double>(gamma_size) / static_cast<double>(bound_denominator); }
  bool meets_bound() const { return orbit_count * bound_denominator >= gamma_size; }
};

/// Throws NotClosed if some N^p escapes gamma.
OrbitReport frobenius_orbits(const TowerCtx& ctx, const std::vector<Elt>& gamma);

struct MrdReport {
  Elt b;
  bool scattered = false;
  unsigned code_dimension_over_fp = 0;
  int min_rank = 0;
  /// rank -> number of codewords seen with that rank (the zero codeword sits at rank 0).
  std::map<int, std::uint64_t> rank_distribution;
  bool is_mrd = false;
  bool exhaustive = false;
  std::uint64_t codewords_checked = 0;
  /// Random codewords with beta != 0 in sampled mode, on top of the q^6 monomials a x.
  std::uint64_t sample_size = 0;
};

/// Exhaustive mode needs q^12 <= 2^22.
inline constexpr std::uint64_t kMrdExhaustiveLimit = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kDefaultMrdSample = 20000;
inline constexpr std::uint64_t kDefaultSeed = 0x5ca77e7edULL;

/// Ranks of the codewords h_{a,beta}(x) = a x + beta (b x^q + x^{q^4}).
MrdReport mrd_check(const Elt& b, bool exhaustive, std::uint64_t sample_size = kDefaultMrdSample,
                    std::uint64_t seed = kDefaultSeed, unsigned workers = 1);

}  // namespace scattered

#endif  // SCATTERED_EQUIV_MRD_HPP
