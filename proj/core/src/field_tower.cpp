#include "scattered/field_tower.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

#include "scattered/number_theory.hpp"

namespace scattered {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotInSubfield: return "NotInSubfield";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::BadSubfieldIndex: return "BadSubfieldIndex";
    case ErrorKind::OddCharRequired: return "OddCharRequired";
    case ErrorKind::EvenCharRequired: return "EvenCharRequired";
    case ErrorKind::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::NonSubspaceKernel: return "NonSubspaceKernel";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::ZeroB: return "ZeroB";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::OracleDisagreement: return "OracleDisagreement";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NormOne: return "NormOne";
    case ErrorKind::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorKind::InvalidFieldSpec: return "InvalidFieldSpec";
  }
  return "Unknown";
}

namespace {

using Digit = Elt::Digit;
using Coeffs = std::array<std::uint32_t, kMaxDegree>;

// Arithmetic in F_p[x]/(f) for monic f = x^d + sum_{i<d} low[i] x^i. Works whether
// or not f is irreducible, which the irreducibility test relies on.
struct PolyRing {
  std::uint32_t p;
  unsigned d;
  Coeffs low{};
  std::uint64_t low_bits = 0;  // p == 2 only

  PolyRing(std::uint32_t p_, unsigned d_, const std::uint32_t* low_coeffs) : p(p_), d(d_) {
    for (unsigned i = 0; i < d; ++i) {
      low[i] = low_coeffs[i] % p;
      if (low[i]) low_bits |= std::uint64_t{1} << i;
    }
  }
  PolyRing(std::uint32_t p_, std::span<const std::uint32_t> monic)
      : PolyRing(p_, static_cast<unsigned>(monic.size() - 1), monic.data()) {}

  template <class A, class B, class Out>
  void mul(const A& a, const B& b, Out& out) const {
    if (p == 2) {
      mul_binary(a, b, out);
      return;
    }
    std::uint64_t acc[2 * kMaxDegree] = {};
    for (unsigned i = 0; i < d; ++i) {
      const std::uint64_t ai = a[i];
      if (!ai) continue;
      for (unsigned j = 0; j < d; ++j) acc[i + j] += ai * b[j];
    }
    for (unsigned k = 2 * d - 2; k >= d; --k) {
      const std::uint64_t t = acc[k] % p;
      if (!t) continue;
      const std::uint64_t u = p - t;
      const unsigned base = k - d;
      for (unsigned j = 0; j < d; ++j) acc[base + j] += u * low[j];
    }
    for (unsigned i = 0; i < d; ++i) out[i] = static_cast<typename Out::value_type>(acc[i] % p);
  }

  template <class A, class B, class Out>
  void mul_binary(const A& a, const B& b, Out& out) const {
    std::uint64_t ab = 0, bb = 0;
    for (unsigned i = 0; i < d; ++i) {
      ab |= std::uint64_t(a[i] & 1u) << i;
      bb |= std::uint64_t(b[i] & 1u) << i;
    }
    unsigned __int128 r = 0;
    while (ab) {
      const int i = std::countr_zero(ab);
      r ^= static_cast<unsigned __int128>(bb) << i;
      ab &= ab - 1;
    }
    for (int k = 2 * static_cast<int>(d) - 2; k >= static_cast<int>(d); --k) {
      if ((r >> k) & 1) {
        r ^= static_cast<unsigned __int128>(1) << k;
        r ^= static_cast<unsigned __int128>(low_bits) << (k - d);
      }
    }
    const auto lo = static_cast<std::uint64_t>(r);
    for (unsigned i = 0; i < d; ++i) out[i] = static_cast<typename Out::value_type>((lo >> i) & 1u);
  }

  Coeffs pow(Coeffs base, std::uint64_t k) const {
    Coeffs r{};
    r[0] = 1 % p;
    while (k) {
      if (k & 1) mul(r, base, r);
      mul(base, base, base);
      k >>= 1;
    }
    return r;
  }

  Coeffs x() const {
    Coeffs r{};
    if (d == 1) {
      r[0] = (p - low[0]) % p;
    } else {
      r[1] = 1;
    }
    return r;
  }
};

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    const std::int64_t qq = r / nr;
    t -= qq * nt;
    std::swap(t, nt);
    r -= qq * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

using Poly = std::vector<std::uint32_t>;  // constant first, no trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t coef = std::uint64_t(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - coef) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

namespace detail {

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  const unsigned d = static_cast<unsigned>(monic.size() - 1);
  if (d == 0 || monic.back() != 1 || d > kMaxDegree) return false;
  if (d == 1) return true;
  if (monic[0] % p == 0) return false;
  const PolyRing ring(p, monic);
  const Coeffs x = ring.x();
  std::vector<Coeffs> powers;  // powers[i] = x^{p^i}
  powers.reserve(d + 1);
  powers.push_back(x);
  for (unsigned i = 1; i <= d; ++i) powers.push_back(ring.pow(powers.back(), p));
  if (powers[d] != x) return false;
  Poly f(monic.begin(), monic.end());
  for (const auto& [ell, mult] : nt::factorize(d)) {
    (void)mult;
    Poly h(powers[d / ell].begin(), powers[d / ell].begin() + d);
    h[1] = (h[1] + p - 1) % p;
    if (poly_gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned d) {
  // Candidates are ordered lexicographically with the constant term most
  // significant; the constant term must be nonzero for d > 1.
  std::vector<std::uint32_t> c(d + 1, 0);
  c[d] = 1;
  c[0] = d > 1 ? 1 : 0;
  for (;;) {
    if (is_irreducible(p, c)) return c;
    int pos = static_cast<int>(d) - 1;
    while (pos >= 0) {
      if (++c[pos] < p) break;
      c[pos] = 0;
      --pos;
    }
    if (pos < 0) throw MathError(ErrorKind::InvalidFieldSpec, "no irreducible polynomial found");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Elt

std::span<const Digit> Elt::coeffs() const {
  assert(ctx_);
  return {c_.data(), ctx_->degree()};
}

bool Elt::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](Digit v) { return v == 0; });
}

bool Elt::is_one() const noexcept {
  return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](Digit v) { return v == 0; });
}

bool Elt::in_prime_field() const noexcept {
  return std::all_of(c_.begin() + 1, c_.end(), [](Digit v) { return v == 0; });
}

Elt Elt::pow(std::uint64_t k) const { return ctx_->pow(*this, k); }
Elt Elt::pow_signed(std::int64_t k) const { return ctx_->pow_signed(*this, k); }
Elt Elt::inv() const { return ctx_->inv(*this); }
Elt Elt::frob(unsigned i) const { return ctx_->frobenius(*this, i); }
Elt Elt::square() const { return ctx_->mul(*this, *this); }

Elt operator+(const Elt& a, const Elt& b) { return a.ctx_->add(a, b); }
Elt operator-(const Elt& a, const Elt& b) { return a.ctx_->sub(a, b); }
Elt operator*(const Elt& a, const Elt& b) { return a.ctx_->mul(a, b); }
Elt operator/(const Elt& a, const Elt& b) { return a.ctx_->div(a, b); }
Elt operator-(const Elt& a) { return a.ctx_->neg(a); }

std::size_t EltHash::operator()(const Elt& x) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Digit v : x.c_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// TowerCtx construction

namespace {

void validate_pe(std::uint32_t p, unsigned e) {
  if (!nt::is_prime(p) || p >= (1u << 16)) {
    throw MathError(ErrorKind::InvalidFieldSpec, "p must be a prime below 2^16, got " + std::to_string(p));
  }
  if (e == 0 || 6 * e > kMaxDegree) {
    throw MathError(ErrorKind::InvalidFieldSpec, "e must satisfy 1 <= e <= " + std::to_string(kMaxDegree / 6));
  }
  const auto order = nt::checked_pow(p, 6 * e);
  if (!order || *order >= (std::uint64_t{1} << 62)) {
    throw MathError(ErrorKind::InvalidFieldSpec, "q^6 must stay below 2^62");
  }
}

}  // namespace

TowerCtx::TowerCtx(std::uint32_t p, unsigned e) {
  validate_pe(p, e);
  spec_.p = p;
  spec_.e = e;
  init(detail::least_irreducible(p, 6 * e));
}

TowerCtx::TowerCtx(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus) {
  validate_pe(p, e);
  spec_.p = p;
  spec_.e = e;
  if (modulus.size() != 6 * e + 1 || modulus.back() != 1) {
    throw MathError(ErrorKind::InvalidFieldSpec, "modulus must be monic of degree 6e");
  }
  for (auto c : modulus) {
    if (c >= p) throw MathError(ErrorKind::InvalidFieldSpec, "modulus digit out of range");
  }
  if (!detail::is_irreducible(p, modulus)) {
    throw MathError(ErrorKind::InvalidFieldSpec, "modulus is not irreducible over F_p");
  }
  init(std::move(modulus));
}

std::unique_ptr<TowerCtx> TowerCtx::for_q(std::uint64_t q) {
  const auto pe = nt::prime_power(q);
  if (!pe) throw MathError(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (pe->first >= (1u << 16)) throw MathError(ErrorKind::InvalidFieldSpec, "characteristic too large");
  return std::make_unique<TowerCtx>(static_cast<std::uint32_t>(pe->first), pe->second);
}

void TowerCtx::init(std::vector<std::uint32_t> modulus) {
  const std::uint32_t p = spec_.p;
  degree_ = 6 * spec_.e;
  spec_.modulus = std::move(modulus);
  for (unsigned i = 0; i < degree_; ++i) mod_low_[i] = spec_.modulus[i];

  q_pow_[0] = 1;
  q_pow_[1] = *nt::checked_pow(p, spec_.e);
  for (unsigned i = 2; i <= 6; ++i) q_pow_[i] = q_pow_[i - 1] * q_pow_[1];

  inv_mod_p_.assign(p, 0);
  for (std::uint32_t a = 1; a < p; ++a) inv_mod_p_[a] = inv_mod(a, p);

  const PolyRing ring(p, spec_.modulus);
  const unsigned d = degree_;
  auto build_columns = [&](const Coeffs& image_of_x) {
    std::vector<Digit> cols(d * d, 0);
    Coeffs power{};
    power[0] = 1;
    for (unsigned j = 0; j < d; ++j) {
      for (unsigned k = 0; k < d; ++k) cols[j * d + k] = static_cast<Digit>(power[k]);
      ring.mul(power, image_of_x, power);
    }
    return cols;
  };
  const Coeffs x = ring.x();
  for (unsigned i = 0; i < 6; ++i) frob_cols_[i] = build_columns(ring.pow(x, q_pow_[i]));
  frob_p_cols_ = build_columns(ring.pow(x, p));

  order_factors_ = nt::factorize(field_order() - 1);

  if (p == 2) {
    // Reduce the F_2-linear map U -> U^2 + U to row echelon form, remembering
    // the row operations so any right-hand side can be pushed through them.
    std::vector<std::uint64_t> mat(d, 0), trans(d, 0);
    for (unsigned j = 0; j < d; ++j) {
      Elt basis = make();
      basis.c_[j] = 1;
      const Elt image = mul(basis, basis) + basis;
      for (unsigned i = 0; i < d; ++i) {
        if (image.c_[i]) mat[i] |= std::uint64_t{1} << j;
      }
    }
    for (unsigned i = 0; i < d; ++i) trans[i] = std::uint64_t{1} << i;
    as_pivots_.assign(d, -1);
    unsigned row = 0;
    for (unsigned col = 0; col < d && row < d; ++col) {
      unsigned sel = row;
      while (sel < d && !((mat[sel] >> col) & 1)) ++sel;
      if (sel == d) continue;
      std::swap(mat[sel], mat[row]);
      std::swap(trans[sel], trans[row]);
      for (unsigned r = 0; r < d; ++r) {
        if (r != row && ((mat[r] >> col) & 1)) {
          mat[r] ^= mat[row];
          trans[r] ^= trans[row];
        }
      }
      as_pivots_[row] = static_cast<int>(col);
      ++row;
    }
    as_rows_ = trans;
  }

  // Least primitive element in coefficient-lex order (constant term most significant).
  const std::uint64_t group_order = field_order() - 1;
  Elt candidate = make();
  for (;;) {
    int pos = static_cast<int>(d) - 1;
    while (pos >= 0) {
      if (++candidate.c_[pos] < p) break;
      candidate.c_[pos] = 0;
      --pos;
    }
    if (pos < 0) throw MathError(ErrorKind::InvalidFieldSpec, "no primitive element found");
    bool primitive = true;
    for (const auto& [ell, mult] : order_factors_) {
      (void)mult;
      if (pow(candidate, group_order / ell).is_one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  generator_ = candidate;

  // Frobenius tables against direct exponentiation on a few fixed samples.
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 4; ++trial) {
    const Elt s = random(rng);
    for (unsigned i = 1; i < 6; ++i) {
      if (frobenius(s, i) != pow(s, q_pow_[i]) || frobenius(frobenius(s, i), 6 - i) != s) {
        throw MathError(ErrorKind::InvalidFieldSpec, "Frobenius self-check failed");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Element construction

Elt TowerCtx::make() const {
  Elt r;
  r.ctx_ = this;
  return r;
}

Elt TowerCtx::zero() const { return make(); }

Elt TowerCtx::one() const {
  Elt r = make();
  r.c_[0] = 1;
  return r;
}

Elt TowerCtx::from_int(std::int64_t v) const {
  Elt r = make();
  const auto p = static_cast<std::int64_t>(spec_.p);
  r.c_[0] = static_cast<Digit>(((v % p) + p) % p);
  return r;
}

Elt TowerCtx::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != degree_) {
    throw MathError(ErrorKind::InvalidFieldSpec,
                    "element needs " + std::to_string(degree_) + " digits, got " + std::to_string(digits.size()));
  }
  Elt r = make();
  for (unsigned i = 0; i < degree_; ++i) {
    if (digits[i] >= spec_.p) throw MathError(ErrorKind::InvalidFieldSpec, "digit out of range");
    r.c_[i] = static_cast<Digit>(digits[i]);
  }
  return r;
}

std::vector<std::uint32_t> TowerCtx::to_digits(const Elt& x) const {
  return {x.c_.begin(), x.c_.begin() + degree_};
}

Elt TowerCtx::from_index(std::uint64_t index) const {
  if (index >= field_order()) throw MathError(ErrorKind::IndexOutOfRange, "element index out of range");
  Elt r = make();
  for (unsigned i = 0; i < degree_ && index; ++i) {
    r.c_[i] = static_cast<Digit>(index % spec_.p);
    index /= spec_.p;
  }
  return r;
}

std::uint64_t TowerCtx::index_of(const Elt& x) const {
  std::uint64_t v = 0;
  for (unsigned i = degree_; i-- > 0;) v = v * spec_.p + x.c_[i];
  return v;
}

Elt TowerCtx::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(0, spec_.p - 1);
  Elt r = make();
  for (unsigned i = 0; i < degree_; ++i) r.c_[i] = static_cast<Digit>(dist(rng));
  return r;
}

// ---------------------------------------------------------------------------
// Arithmetic

Elt TowerCtx::add(const Elt& a, const Elt& b) const {
  Elt r = make();
  if (spec_.p == 2) {
    for (unsigned i = 0; i < degree_; ++i) r.c_[i] = a.c_[i] ^ b.c_[i];
    return r;
  }
  for (unsigned i = 0; i < degree_; ++i) {
    std::uint32_t s = std::uint32_t(a.c_[i]) + b.c_[i];
    if (s >= spec_.p) s -= spec_.p;
    r.c_[i] = static_cast<Digit>(s);
  }
  return r;
}

Elt TowerCtx::neg(const Elt& a) const {
  Elt r = make();
  for (unsigned i = 0; i < degree_; ++i) r.c_[i] = a.c_[i] ? static_cast<Digit>(spec_.p - a.c_[i]) : 0;
  return r;
}

Elt TowerCtx::sub(const Elt& a, const Elt& b) const {
  Elt r = make();
  for (unsigned i = 0; i < degree_; ++i) {
    std::uint32_t s = std::uint32_t(a.c_[i]) + spec_.p - b.c_[i];
    if (s >= spec_.p) s -= spec_.p;
    r.c_[i] = static_cast<Digit>(s);
  }
  return r;
}

Elt TowerCtx::mul(const Elt& a, const Elt& b) const {
  Elt r = make();
  if (a.in_prime_field() || b.in_prime_field()) {
    const Elt& scalar = a.in_prime_field() ? a : b;
    const Elt& other = a.in_prime_field() ? b : a;
    const std::uint32_t s = scalar.c_[0];
    for (unsigned i = 0; i < degree_; ++i) r.c_[i] = static_cast<Digit>(std::uint64_t(s) * other.c_[i] % spec_.p);
    return r;
  }
  const PolyRing ring(spec_.p, degree_, mod_low_.data());
  ring.mul(a.c_, b.c_, r.c_);
  return r;
}

Elt TowerCtx::inv(const Elt& a) const {
  if (a.is_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t p = spec_.p;
  const unsigned d = degree_;
  if (a.in_prime_field()) return from_int(inv_mod_p_[a.c_[0]]);
  // Extended Euclid on (modulus, a), tracking only the Bezout coefficient of a.
  using Buf = std::array<std::uint32_t, kMaxDegree + 1>;
  Buf r0{}, r1{}, s0{}, s1{};
  for (unsigned i = 0; i <= d; ++i) r0[i] = spec_.modulus[i];
  for (unsigned i = 0; i < d; ++i) r1[i] = a.c_[i];
  s1[0] = 1;
  auto degree_of = [](const Buf& v, int hint) {
    while (hint >= 0 && v[hint] == 0) --hint;
    return hint;
  };
  int d0 = static_cast<int>(d), d1 = degree_of(r1, static_cast<int>(d) - 1);
  int ds0 = -1, ds1 = 0;
  while (d1 > 0) {
    const std::uint32_t lead_inv = inv_mod_p_[r1[d1]];
    while (d0 >= d1) {
      const std::uint64_t coef = std::uint64_t(r0[d0]) * lead_inv % p;
      const int shift = d0 - d1;
      const std::uint64_t neg = p - coef;
      for (int i = 0; i <= d1; ++i) r0[shift + i] = static_cast<std::uint32_t>((r0[shift + i] + neg * r1[i]) % p);
      for (int i = 0; i <= ds1; ++i) s0[shift + i] = static_cast<std::uint32_t>((s0[shift + i] + neg * s1[i]) % p);
      ds0 = std::max(ds0, ds1 + shift);
      ds0 = degree_of(s0, ds0);
      d0 = degree_of(r0, d0);
      if (d0 < 0) break;
    }
    std::swap(r0, r1);
    std::swap(d0, d1);
    std::swap(s0, s1);
    std::swap(ds0, ds1);
  }
  // r1 is now a nonzero constant and s1 * a = r1 (mod f).
  const std::uint64_t scale = inv_mod_p_[r1[0]];
  Elt r = make();
  for (int i = 0; i <= ds1 && i < static_cast<int>(d); ++i) r.c_[i] = static_cast<Digit>(s1[i] * scale % p);
  return r;
}

Elt TowerCtx::div(const Elt& a, const Elt& b) const {
  if (b.is_zero()) throw MathError(ErrorKind::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Elt TowerCtx::pow(const Elt& a, std::uint64_t k) const {
  Elt r = one();
  Elt base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return r;
}

Elt TowerCtx::pow_signed(const Elt& a, std::int64_t k) const {
  if (k >= 0) return pow(a, static_cast<std::uint64_t>(k));
  return pow(inv(a), static_cast<std::uint64_t>(-(k + 1)) + 1);
}

// ---------------------------------------------------------------------------
// Frobenius, norm, trace


Elt TowerCtx::frobenius(const Elt& x, unsigned i) const {
  i %= 6;
  if (i == 0 || x.in_prime_field()) return x;
  const auto& cols = frob_cols_[i];
  const unsigned d = degree_;
  std::uint64_t acc[kMaxDegree] = {};
  for (unsigned j = 0; j < d; ++j) {
    const std::uint64_t c = x.c_[j];
    if (!c) continue;
    const Digit* col = &cols[j * d];
    for (unsigned k = 0; k < d; ++k) acc[k] += c * col[k];
  }
  Elt r = make();
  for (unsigned k = 0; k < d; ++k) r.c_[k] = static_cast<Digit>(acc[k] % spec_.p);
  return r;
}

Elt TowerCtx::frobenius_p(const Elt& x) const {
  if (x.in_prime_field()) return x;
  const unsigned d = degree_;
  std::uint64_t acc[kMaxDegree] = {};
  for (unsigned j = 0; j < d; ++j) {
    const std::uint64_t c = x.c_[j];
    if (!c) continue;
    const Digit* col = &frob_p_cols_[j * d];
    for (unsigned k = 0; k < d; ++k) acc[k] += c * col[k];
  }
  Elt r = make();
  for (unsigned k = 0; k < d; ++k) r.c_[k] = static_cast<Digit>(acc[k] % spec_.p);
  return r;
}

Elt TowerCtx::norm_q6_q3(const Elt& b) const { return mul(frobenius(b, 3), b); }

bool TowerCtx::in_subfield(const Elt& x, unsigned k) const {
  if (k != 1 && k != 2 && k != 3 && k != 6) {
    throw MathError(ErrorKind::BadSubfieldIndex, "subfield index must divide 6, got " + std::to_string(k));
  }
  return frobenius(x, k) == x;
}

Elt TowerCtx::trace_down(const Elt& x, TraceTarget target) const {
  if (!in_subfield(x, 3)) throw MathError(ErrorKind::NotInSubfield, "trace_down expects an element of F_{q^3}");
  if (target == TraceTarget::Fq) return x + frobenius(x, 1) + frobenius(x, 2);
  if (spec_.p != 2) throw MathError(ErrorKind::BadCharacteristic, "trace to F_2 needs p = 2");
  Elt acc = zero();
  Elt term = x;
  for (unsigned i = 0; i < 3 * spec_.e; ++i) {
    acc += term;
    term = mul(term, term);
  }
  return acc;
}

Elt TowerCtx::trace_fq_to_f2(const Elt& x) const {
  if (spec_.p != 2) throw MathError(ErrorKind::BadCharacteristic, "trace to F_2 needs p = 2");
  if (!in_subfield(x, 1)) throw MathError(ErrorKind::NotInSubfield, "expected an element of F_q");
  Elt acc = zero();
  Elt term = x;
  for (unsigned i = 0; i < spec_.e; ++i) {
    acc += term;
    term = mul(term, term);
  }
  return acc;
}

bool TowerCtx::is_square_in_fq_star(const Elt& a) const {
  if (spec_.p == 2) throw MathError(ErrorKind::OddCharRequired, "square classes of F_q^* need q odd");
  if (!in_subfield(a, 1)) throw MathError(ErrorKind::NotInSubfield, "expected an element of F_q");
  if (a.is_zero()) return false;
  return pow(a, (q() - 1) / 2).is_one();
}

bool TowerCtx::power_class_q2q1(const Elt& t) const {
  if (t.is_zero()) return true;
  return pow(t, (q() - 1) * (q_pow_[3] + 1)).is_one();
}

// ---------------------------------------------------------------------------
// Square roots and quadratics

std::optional<Elt> TowerCtx::sqrt(const Elt& a) const {
  if (a.is_zero()) return a;
  const unsigned d = degree_;
  if (spec_.p == 2) {
    Elt r = a;
    for (unsigned i = 0; i + 1 < d; ++i) r = mul(r, r);
    return r;
  }
  const std::uint64_t order = field_order() - 1;
  if (!pow(a, order / 2).is_one()) return std::nullopt;
  // Tonelli-Shanks with the primitive element as the non-residue.
  unsigned s = 0;
  std::uint64_t t = order;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  Elt c = pow(generator_, t);
  Elt tt = pow(a, t);
  Elt r = pow(a, (t + 1) / 2);
  unsigned m = s;
  while (!tt.is_one()) {
    unsigned i = 0;
    Elt probe = tt;
    while (!probe.is_one()) {
      probe = mul(probe, probe);
      ++i;
    }
    Elt b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    tt = mul(tt, c);
    r = mul(r, b);
  }
  return r;
}

Elt TowerCtx::artin_schreier_root(const Elt& c) const {
  // Caller guarantees solvability; free variables are set to zero.
  std::uint64_t rhs = 0;
  for (unsigned i = 0; i < degree_; ++i) {
    if (c.c_[i]) rhs |= std::uint64_t{1} << i;
  }
  Elt u = make();
  for (unsigned row = 0; row < degree_; ++row) {
    const int bit = std::popcount(as_rows_[row] & rhs) & 1;
    if (as_pivots_[row] >= 0) {
      u.c_[as_pivots_[row]] = static_cast<Digit>(bit);
    } else if (bit) {
      throw MathError(ErrorKind::PreconditionUnmet, "Artin-Schreier equation has no solution");
    }
  }
  return u;
}

std::vector<Elt> TowerCtx::solve_quadratic(const Elt& a, const Elt& b, const Elt& c) const {
  if (a.is_zero()) throw MathError(ErrorKind::ZeroLeadingCoefficient, "quadratic with A = 0");
  std::vector<Elt> roots;
  if (spec_.p != 2) {
    const Elt two_a = from_int(2) * a;
    const Elt disc = b * b - from_int(4) * a * c;
    if (disc.is_zero()) {
      roots.push_back(-b / two_a);
      return roots;
    }
    const auto root = sqrt(disc);
    if (!root) return roots;
    roots.push_back((-b + *root) / two_a);
    roots.push_back((-b - *root) / two_a);
  } else {
    if (b.is_zero()) {
      roots.push_back(*sqrt(c / a));
      return roots;
    }
    // T = (B/A) U turns A T^2 + B T + C into U^2 + U = AC/B^2.
    const Elt rhs = a * c / (b * b);
    Elt absolute_trace = zero();
    Elt term = rhs;
    for (unsigned i = 0; i < degree_; ++i) {
      absolute_trace += term;
      term = mul(term, term);
    }
    if (!absolute_trace.is_zero()) return roots;
    const Elt u = artin_schreier_root(rhs);
    const Elt scale = b / a;
    roots.push_back(scale * u);
    roots.push_back(scale * (u + one()));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Enumeration helpers

std::pair<Elt, Elt> TowerCtx::norm_fiber_representative(std::uint64_t k) const {
  if (k >= q_pow_[3] - 1) throw MathError(ErrorKind::IndexOutOfRange, "fiber index must be below q^3 - 1");
  const Elt b = pow(generator_, k);
  return {b, norm_q6_q3(b)};
}

Elt TowerCtx::norm_preimage(const Elt& n) const {
  if (n.is_zero()) throw MathError(ErrorKind::ZeroInput, "zero has no norm preimage in F_{q^6}^*");
  if (!in_subfield(n, 3)) throw MathError(ErrorKind::NotInSubfield, "norms lie in F_{q^3}");
  if (spec_.p == 2) return pow(n, q_pow_[3] / 2);
  Elt s = *sqrt(n);
  if (norm_q6_q3(s) == n) return s;
  // s^{q^3} = -s here; an element of norm -1 fixes the sign.
  return s * pow(generator_, (q_pow_[3] - 1) / 2);
}

std::vector<Elt> TowerCtx::subfield_elements(unsigned k) const {
  if (k != 1 && k != 2 && k != 3) throw MathError(ErrorKind::BadSubfieldIndex, "enumeration supports k in {1,2,3}");
  const std::uint64_t size = q_pow_[k];
  const Elt h = pow(generator_, (field_order() - 1) / (size - 1));
  std::vector<Elt> out;
  out.reserve(size);
  out.push_back(zero());
  Elt cur = one();
  for (std::uint64_t j = 0; j + 1 < size; ++j) {
    out.push_back(cur);
    cur = mul(cur, h);
  }
  return out;
}

}  // namespace scattered
