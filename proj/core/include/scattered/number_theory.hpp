#ifndef SCATTERED_NUMBER_THEORY_HPP
#define SCATTERED_NUMBER_THEORY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

namespace scattered::nt {

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Prime factorization by trial division followed by Pollard rho (Brent).
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

/// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

/// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

}  // namespace scattered::nt

#endif  // SCATTERED_NUMBER_THEORY_HPP
