#ifndef SCATTERED_REPORT_CONFIG_HPP
#define SCATTERED_REPORT_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scattered/field_tower.hpp"

namespace scattered::report {

/// Malformed command-line input; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Json, Table };

struct RunConfig {
  std::uint32_t p = 0;
  unsigned e = 0;
  std::optional<std::vector<std::uint32_t>> modulus_override;
  std::vector<std::uint64_t> q_list;
  std::optional<std::string> b_text;
  std::optional<std::string> n_text;
  bool oracle = false;
  bool sweep = false;
  bool exhaustive = false;
  std::uint64_t sample = 0;
  std::uint64_t scan = 0;
  unsigned workers = 0;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Json;
};

/// "2,3,4" -> {2,3,4}; every entry must be a prime power >= 2.
std::vector<std::uint64_t> parse_q_list(const std::string& text);

/// "[1,0,2]" or "1,0,2" -> digits.
std::vector<std::uint32_t> parse_digits(const std::string& text);

/// Digit array or "g^k" (k may be negative).
Elt parse_element(const TowerCtx& ctx, const std::string& text);

/// Tower for (p, e) with the optional modulus override.
std::unique_ptr<TowerCtx> make_tower(const RunConfig& cfg);

/// Seed from SCATTERED_LAB_SEED, else the built-in default.
std::uint64_t seed_from_env();

}  // namespace scattered::report

#endif  // SCATTERED_REPORT_CONFIG_HPP
