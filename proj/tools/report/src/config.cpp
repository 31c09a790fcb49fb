#include "scattered_report/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "scattered/equiv_mrd.hpp"
#include "scattered/number_theory.hpp"

namespace scattered::report {

namespace {

std::string strip(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view token, const std::string& what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw UsageError("cannot parse " + what + " from '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view body) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = body.find(',');
    parts.push_back(body.substr(0, pos));
    if (pos == std::string_view::npos) break;
    body.remove_prefix(pos + 1);
  }
  return parts;
}

}  // namespace

std::vector<std::uint64_t> parse_q_list(const std::string& text) {
  const std::string body = strip(text);
  std::vector<std::uint64_t> out;
  for (auto token : split_commas(body)) {
    const auto q = parse_int<std::uint64_t>(token, "q");
    if (!nt::prime_power(q)) throw UsageError(std::to_string(q) + " is not a prime power");
    out.push_back(q);
  }
  return out;
}

std::vector<std::uint32_t> parse_digits(const std::string& text) {
  std::string body = strip(text);
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  std::vector<std::uint32_t> out;
  for (auto token : split_commas(body)) out.push_back(parse_int<std::uint32_t>(token, "digit"));
  return out;
}

Elt parse_element(const TowerCtx& ctx, const std::string& text) {
  const std::string body = strip(text);
  if (body.rfind("g^", 0) == 0) {
    return ctx.pow_signed(ctx.generator(), parse_int<std::int64_t>(std::string_view(body).substr(2), "exponent"));
  }
  const auto digits = parse_digits(body);
  if (digits.size() != ctx.degree()) {
    throw UsageError("element needs " + std::to_string(ctx.degree()) + " digits, got " + std::to_string(digits.size()));
  }
  for (auto d : digits) {
    if (d >= ctx.p()) throw UsageError("digit " + std::to_string(d) + " out of range for p = " + std::to_string(ctx.p()));
  }
  return ctx.from_digits(digits);
}

std::unique_ptr<TowerCtx> make_tower(const RunConfig& cfg) {
  if (cfg.p == 0 || cfg.e == 0) throw UsageError("--p and --e are required");
  if (!nt::is_prime(cfg.p)) throw UsageError("p = " + std::to_string(cfg.p) + " is not prime");
  try {
    if (cfg.modulus_override) return std::make_unique<TowerCtx>(cfg.p, cfg.e, *cfg.modulus_override);
    return std::make_unique<TowerCtx>(cfg.p, cfg.e);
  } catch (const MathError& err) {
    throw UsageError(err.what());
  }
}

std::uint64_t seed_from_env() {
  if (const char* raw = std::getenv("SCATTERED_LAB_SEED"); raw && *raw) {
    return parse_int<std::uint64_t>(raw, "SCATTERED_LAB_SEED");
  }
  return kDefaultSeed;
}

}  // namespace scattered::report
