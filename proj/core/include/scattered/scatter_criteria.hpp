#ifndef SCATTERED_SCATTER_CRITERIA_HPP
#define SCATTERED_SCATTER_CRITERIA_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "scattered/field_tower.hpp"
#include "scattered/linearized.hpp"

namespace scattered {

/// r_{m,b}(x) = m x + b x^q + x^{q^4}.
LinPoly r_poly(const Elt& m, const Elt& b);

enum class Route { Oracle, ClosedFormOdd, ClosedFormEven };
std::string_view to_string(Route route);

struct ScatterVerdict {
  bool scattered = false;
  Route route = Route::Oracle;
  /// Some m with dim ker r_{m,b} >= 2; oracle route only.
  std::optional<Elt> witness_m;
  Elt N;
};

/// Checks every m in F_{q^6}: g^0, g^1, ..., g^{q^6-2}, then 0. The witness is the
/// first failing m in that order regardless of `workers` (0 = hardware default).
ScatterVerdict brute_is_scattered(const Elt& b, unsigned workers = 1);

/// phi_b(T) = A T^2 + B T + C together with the norm and the derived quantity
/// that decides the criterion (discriminant for q odd, AC/B^2 for q even).
struct PhiQuadratic {
  Parity parity = Parity::Odd;
  Elt A, B, C, N;
  std::optional<Elt> delta_b;
  std::optional<Elt> ac_over_b2;
};

PhiQuadratic phi_b(const Elt& b);

/// N^{q^2+q+1}, the norm from F_{q^3} to F_q.
Elt norm_q3_q(const Elt& n);

/// Discriminant of phi_b written in terms of N (q odd).
Elt delta_from_norm(const Elt& n);

/// Tr_{q^3/q}(AC/B^2) written in terms of N (q even, B != 0).
Elt trace_ac_over_b2_from_norm(const Elt& n);

bool criterion_odd(const Elt& n);
bool criterion_even(const Elt& n);

/// Closed-form verdict, dispatched on the characteristic.
ScatterVerdict is_scattered(const Elt& b);

enum class RootBranch {
  OddDeltaZero,
  OddDeltaSquareNInFq,
  OddDeltaSquareNNotInFq,
  OddDeltaNonsquare,
  EvenBZero,
  EvenNInFq,
  EvenNNotInFqTraceOne,
  EvenNNotInFqTraceZero,
};
std::string_view to_string(RootBranch branch);

/// Whether every root of phi_b is a (q^2+q+1)-th power on this branch.
bool branch_roots_are_powers(RootBranch branch);

struct RootPowerStatus {
  RootBranch branch;
  std::vector<Elt> roots;
  bool all_roots_are_powers = false;
};

RootPowerStatus root_power_status(const Elt& b);

/// For N != 1 and U_b not scattered: does phi_b have a nonzero (q^2+q+1)-th power
/// root? Runs the brute oracle to establish the precondition.
bool mainlemma_check(const Elt& b, unsigned workers = 1);

struct SubstitutionCheck {
  bool det_m0 = false;
  bool det_m1 = false;
  /// Only evaluated for q even on the Tr = 1 branch.
  std::optional<bool> root_relation;

  bool ok() const { return det_m0 && det_m1 && root_relation.value_or(true); }
};

/// Evaluates det M_0(m,b) and det M_1(m,b) through t = m^{q^3+q^4+q^5} and compares
/// them with the Dickson determinants; for q even with Tr_{q^3/2}(AC/B^2) = 1 also
/// checks t^q = b^{q^4-1} t + b^{q^2-1}(N+1)^{q+1} on the roots of phi_b^{q^4}.
SubstitutionCheck substitution_identities_check(const Elt& m, const Elt& b);

/// The relation above on its own; nullopt off the Tr = 1 branch.
std::optional<bool> root_relation_check(const Elt& b);

}  // namespace scattered

#endif  // SCATTERED_SCATTER_CRITERIA_HPP
