#ifndef SCATTERED_FIELD_TOWER_HPP
#define SCATTERED_FIELD_TOWER_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "scattered/error.hpp"

namespace scattered {

/// Upper bound on 6e, the degree of F_{q^6} over F_p.
inline constexpr std::size_t kMaxDegree = 48;

/// Characteristic, q-exponent and the defining polynomial of F_{q^6} = F_p[x]/(modulus).
/// `modulus` is monic of degree 6e, constant term first, leading 1 included.
struct FieldSpec {
  std::uint32_t p = 0;
  unsigned e = 0;
  std::vector<std::uint32_t> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

enum class Parity { Odd, Even };
enum class TraceTarget { Fq, F2 };

class TowerCtx;

/// An element of F_{q^6}: 6e residues mod p, coefficient of x^i at index i.
/// Elements remember the tower they belong to so arithmetic reads naturally;
/// the tower must outlive them.
class Elt {
 public:
  using Digit = std::uint16_t;

  Elt() = default;

  const TowerCtx* ctx() const noexcept { return ctx_; }
  std::span<const Digit> coeffs() const;
  Digit coeff(std::size_t i) const { return c_[i]; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when only the constant coefficient may be nonzero (x lies in F_p).
  bool in_prime_field() const noexcept;

  Elt pow(std::uint64_t k) const;
  /// Negative exponents go through the inverse.
  Elt pow_signed(std::int64_t k) const;
  Elt inv() const;
  Elt frob(unsigned i) const;
  Elt square() const;

  friend Elt operator+(const Elt& a, const Elt& b);
  friend Elt operator-(const Elt& a, const Elt& b);
  friend Elt operator*(const Elt& a, const Elt& b);
  friend Elt operator/(const Elt& a, const Elt& b);
  friend Elt operator-(const Elt& a);
  Elt& operator+=(const Elt& b) { return *this = *this + b; }
  Elt& operator-=(const Elt& b) { return *this = *this - b; }
  Elt& operator*=(const Elt& b) { return *this = *this * b; }

  friend bool operator==(const Elt& a, const Elt& b) noexcept { return a.c_ == b.c_; }
  /// Coefficient-lexicographic, constant term compared first.
  friend std::strong_ordering operator<=>(const Elt& a, const Elt& b) noexcept { return a.c_ <=> b.c_; }

 private:
  friend class TowerCtx;
  friend struct EltHash;
  const TowerCtx* ctx_ = nullptr;
  std::array<Digit, kMaxDegree> c_{};
};

struct EltHash {
  std::size_t operator()(const Elt& x) const noexcept;
};

/// Exact arithmetic in F_p ⊂ F_q ⊂ F_{q^3} ⊂ F_{q^6}, all realised inside the single
/// extension F_p[x]/(modulus) of degree 6e. Subfields are recognised by Frobenius
/// fixed points. Immutable after construction and safe to share across threads.
class TowerCtx {
 public:
  /// Uses the lexicographically least monic irreducible of degree 6e.
  TowerCtx(std::uint32_t p, unsigned e);
  /// Uses the given modulus after verifying it is irreducible of degree 6e.
  TowerCtx(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus);

  TowerCtx(const TowerCtx&) = delete;
  TowerCtx& operator=(const TowerCtx&) = delete;

  static std::unique_ptr<TowerCtx> for_q(std::uint64_t q);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t p() const noexcept { return spec_.p; }
  unsigned e() const noexcept { return spec_.e; }
  unsigned degree() const noexcept { return degree_; }
  Parity parity() const noexcept { return spec_.p == 2 ? Parity::Even : Parity::Odd; }
  std::uint64_t q() const noexcept { return q_pow_[1]; }
  /// q^i for 0 <= i <= 6.
  std::uint64_t q_pow(unsigned i) const { return q_pow_.at(i); }
  std::uint64_t field_order() const noexcept { return q_pow_[6]; }
  /// Primitive element: the least (coefficient-lex) element of order q^6 - 1.
  const Elt& generator() const noexcept { return generator_; }
  const std::map<std::uint64_t, unsigned>& group_order_factors() const noexcept { return order_factors_; }

  Elt zero() const;
  Elt one() const;
  Elt from_int(std::int64_t v) const;
  /// Digits constant-first; must have length 6e and entries in [0, p).
  Elt from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> to_digits(const Elt& x) const;
  /// Element whose base-p digits (constant first) spell `index`; index < q^6.
  Elt from_index(std::uint64_t index) const;
  std::uint64_t index_of(const Elt& x) const;
  Elt random(std::mt19937_64& rng) const;

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt inv(const Elt& a) const;
  Elt div(const Elt& a, const Elt& b) const;
  Elt pow(const Elt& a, std::uint64_t k) const;
  Elt pow_signed(const Elt& a, std::int64_t k) const;

  /// x^{q^i}; i is reduced mod 6.
  Elt frobenius(const Elt& x, unsigned i) const;
  /// x^p.
  Elt frobenius_p(const Elt& x) const;
  /// N_{q^6/q^3}(b) = b^{q^3+1}.
  Elt norm_q6_q3(const Elt& b) const;
  /// Trace from F_{q^3} down to F_q or (p = 2 only) to F_2.
  Elt trace_down(const Elt& x, TraceTarget target) const;
  /// Absolute trace of an F_q element to F_2 (p = 2 only).
  Elt trace_fq_to_f2(const Elt& x) const;
  /// True iff x^{q^k} = x, for k in {1, 2, 3, 6}.
  bool in_subfield(const Elt& x, unsigned k) const;
  /// Euler criterion for a in F_q (q odd); zero is not a square of F_q^*.
  bool is_square_in_fq_star(const Elt& a) const;
  /// t is a (q^2+q+1)-th power in F_{q^6}: t = 0 or t^{(q-1)(q^3+1)} = 1.
  bool power_class_q2q1(const Elt& t) const;
  /// Square root in F_{q^6}, if one exists.
  std::optional<Elt> sqrt(const Elt& a) const;
  /// All roots in F_{q^6} of A T^2 + B T + C, sorted, without repetition.
  std::vector<Elt> solve_quadratic(const Elt& a, const Elt& b, const Elt& c) const;
  /// (g^k, g^{k(q^3+1)}) for k in [0, q^3 - 1).
  std::pair<Elt, Elt> norm_fiber_representative(std::uint64_t k) const;
  /// Some b with b^{q^3+1} = n, for n in F_{q^3}^*.
  Elt norm_preimage(const Elt& n) const;
  /// Every element of F_{q^k}, k in {1, 2, 3}: zero first, then powers of a generator.
  std::vector<Elt> subfield_elements(unsigned k) const;

 private:
  void init(std::vector<std::uint32_t> modulus);
  Elt make() const;
  Elt artin_schreier_root(const Elt& c) const;

  FieldSpec spec_;
  unsigned degree_ = 0;
  std::array<std::uint64_t, 7> q_pow_{};
  std::array<std::uint32_t, kMaxDegree> mod_low_{};
  std::vector<std::uint32_t> inv_mod_p_;
  // frob_cols_[i][j * d + k]: coefficient k of (x^j)^{q^i}.
  std::array<std::vector<Elt::Digit>, 6> frob_cols_;
  std::vector<Elt::Digit> frob_p_cols_;
  std::map<std::uint64_t, unsigned> order_factors_;
  Elt generator_;
  // Artin-Schreier solver for p = 2: rows of the reduced system for U^2 + U.
  std::vector<std::uint64_t> as_rows_;
  std::vector<int> as_pivots_;
};

namespace detail {
/// Lexicographically least monic irreducible polynomial of degree d over F_p.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned d);
/// Rabin irreducibility test; coefficients constant-first, leading 1 included.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);
}  // namespace detail

}  // namespace scattered

#endif  // SCATTERED_FIELD_TOWER_HPP
