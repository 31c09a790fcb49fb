// scattered_lab: batch reports on the scattered subspaces U_b = {(x, b x^q + x^{q^4})}.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "scattered/census.hpp"
#include "scattered/equiv_mrd.hpp"
#include "scattered/number_theory.hpp"
#include "scattered/parallel.hpp"
#include "scattered/scatter_criteria.hpp"
#include "scattered_report/config.hpp"
#include "scattered_report/json_report.hpp"

namespace {

using namespace scattered;
using namespace scattered::report;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Outcome {
  Json json;
  std::string table;
  bool ok = true;
};

std::vector<std::unique_ptr<TowerCtx>> towers_for(const RunConfig& cfg) {
  std::vector<std::unique_ptr<TowerCtx>> out;
  if (cfg.q_list.empty()) {
    out.push_back(make_tower(cfg));
    return out;
  }
  if (cfg.modulus_override) throw UsageError("--modulus cannot be combined with --q");
  for (auto q : cfg.q_list) {
    const auto pe = nt::prime_power(q);
    if (pe->first >= (1u << 16)) throw UsageError("characteristic of q = " + std::to_string(q) + " is too large");
    try {
      out.push_back(std::make_unique<TowerCtx>(static_cast<std::uint32_t>(pe->first), pe->second));
    } catch (const MathError& err) {
      throw UsageError(err.what());
    }
  }
  return out;
}

// b from --b, or a norm preimage of --N.
Elt target_b(const TowerCtx& ctx, const RunConfig& cfg) {
  if (cfg.b_text && cfg.n_text) throw UsageError("give either --b or --N, not both");
  if (cfg.b_text) {
    const Elt b = parse_element(ctx, *cfg.b_text);
    if (b.is_zero()) throw UsageError("b must be nonzero");
    return b;
  }
  if (cfg.n_text) {
    const Elt n = parse_element(ctx, *cfg.n_text);
    if (n.is_zero()) throw UsageError("N must be nonzero");
    if (!ctx.in_subfield(n, 3)) throw UsageError("N must lie in F_{q^3}");
    return ctx.norm_preimage(n);
  }
  throw UsageError("one of --b, --N is required");
}

std::string digits_text(const Elt& x) {
  std::string s = "[";
  const auto d = x.ctx()->to_digits(x);
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

Outcome cmd_field_info(const RunConfig& cfg) {
  Outcome out;
  out.json = Json::array();
  std::ostringstream table;
  table << "q\tp\te\tdegree\tmodulus\tgenerator\n";
  for (const auto& ctx : towers_for(cfg)) {
    out.json.push_back(field_info(*ctx));
    std::string mod;
    for (auto c : ctx->spec().modulus) mod += std::to_string(c);
    table << ctx->q() << '\t' << ctx->p() << '\t' << ctx->e() << '\t' << ctx->degree() << '\t' << mod << '\t'
          << digits_text(ctx->generator()) << '\n';
  }
  out.table = table.str();
  return out;
}

Outcome cmd_scattered(const RunConfig& cfg) {
  const auto ctx = make_tower(cfg);
  std::vector<Elt> targets;
  if (cfg.sweep) {
    if (cfg.b_text || cfg.n_text) throw UsageError("--sweep replaces --b/--N");
    for (std::uint64_t k = 0; k + 1 < ctx->q_pow(3); ++k) targets.push_back(ctx->norm_fiber_representative(k).first);
  } else {
    targets.push_back(target_b(*ctx, cfg));
  }
  Outcome out;
  Json verdicts = Json::array();
  std::ostringstream table;
  table << "b\tN\tscattered" << (cfg.oracle ? "\toracle\tagree" : "") << '\n';
  std::uint64_t scattered_count = 0;
  for (const auto& b : targets) {
    const ScatterVerdict v = is_scattered(b);
    Json rec = to_json(v, b);
    table << digits_text(b) << '\t' << digits_text(v.N) << '\t' << v.scattered;
    if (cfg.oracle) {
      const ScatterVerdict brute = brute_is_scattered(b, cfg.workers);
      const bool agree = brute.scattered == v.scattered;
      rec["oracle"] = to_json(brute, b);
      rec["agree"] = agree;
      out.ok = out.ok && agree;
      table << '\t' << brute.scattered << '\t' << agree;
    }
    table << '\n';
    if (v.scattered) ++scattered_count;
    verdicts.push_back(std::move(rec));
  }
  out.json = Json{{"field_spec", to_json(ctx->spec())}, {"scattered_count", scattered_count}, {"verdicts", verdicts}};
  out.table = table.str();
  return out;
}

Outcome cmd_gamma(const RunConfig& cfg) {
  Outcome out;
  out.json = Json::array();
  std::ostringstream table;
  table << "q\tp\te\tsize\tconjecture\tclosed_form\tmatch\toracle\n";
  for (const auto& ctx : towers_for(cfg)) {
    const GammaReport rep = enumerate_gamma(*ctx, cfg.oracle, cfg.workers);
    const bool match = rep.matches_conjecture && rep.matches_closed_form;
    out.ok = out.ok && match;
    out.json.push_back(to_json(rep));
    table << rep.q << '\t' << ctx->p() << '\t' << ctx->e() << '\t' << rep.size << '\t' << rep.conjecture_value << '\t'
          << rep.closed_form_value << '\t' << match << '\t' << rep.oracle_checked << '\n';
  }
  out.table = table.str();
  return out;
}

Outcome cmd_cubics(const RunConfig& cfg) {
  Outcome out;
  out.json = Json::array();
  std::ostringstream table;
  for (const auto& ctx : towers_for(cfg)) {
    const CubicReport rep = ctx->parity() == Parity::Odd ? star_census_odd(*ctx) : star_census_even(*ctx);
    out.ok = out.ok && rep.all_match();
    out.json.push_back(to_json(rep));
    table << "q = " << rep.q << "  gamma0..3 = " << rep.gamma[0] << ' ' << rep.gamma[1] << ' ' << rep.gamma[2] << ' '
          << rep.gamma[3] << '\n';
    for (const auto* entries : {&rep.expected, &rep.consistency}) {
      for (const auto& e : *entries) {
        table << "  " << e.name << '\t' << e.expected << '\t' << e.actual << '\t' << (e.match() ? "ok" : "MISMATCH")
              << '\n';
      }
    }
  }
  out.table = table.str();
  return out;
}

Outcome cmd_orbits(const RunConfig& cfg) {
  Outcome out;
  out.json = Json::array();
  std::ostringstream table;
  table << "q\tgamma\torbits\tbound\tclosed\tsizes_divide_3e\n";
  for (const auto& ctx : towers_for(cfg)) {
    const GammaReport gamma = enumerate_gamma(*ctx, false, cfg.workers);
    const OrbitReport rep = frobenius_orbits(*ctx, gamma.gamma);
    out.ok = out.ok && rep.meets_bound() && rep.orbit_sizes_divide && rep.frobenius_closed;
    Json j = to_json(rep);
    j["q"] = ctx->q();
    out.json.push_back(std::move(j));
    table << ctx->q() << '\t' << rep.gamma_size << '\t' << rep.orbit_count << '\t' << rep.gamma_size << '/'
          << rep.bound_denominator << '\t' << rep.frobenius_closed << '\t' << rep.orbit_sizes_divide << '\n';
  }
  out.table = table.str();
  return out;
}

Outcome cmd_mrd(const RunConfig& cfg) {
  const auto ctx = make_tower(cfg);
  std::vector<Elt> targets;
  if (cfg.scan > 0) {
    if (cfg.b_text || cfg.n_text) throw UsageError("--scan replaces --b/--N");
    for (std::uint64_t k = 0; k + 1 < ctx->q_pow(3) && targets.size() < cfg.scan; ++k) {
      const Elt b = ctx->norm_fiber_representative(k).first;
      if (is_scattered(b).scattered) targets.push_back(b);
    }
  } else {
    targets.push_back(target_b(*ctx, cfg));
  }
  const std::uint64_t sample = cfg.sample > 0 ? cfg.sample : kDefaultMrdSample;
  Outcome out;
  Json reports = Json::array();
  std::ostringstream table;
  table << "b\tscattered\tmin_rank\tis_mrd\tmode\tcodewords\n";
  for (const auto& b : targets) {
    const MrdReport rep = mrd_check(b, cfg.exhaustive, sample, cfg.seed, cfg.workers);
    out.ok = out.ok && rep.is_mrd == rep.scattered;
    reports.push_back(to_json(rep));
    table << digits_text(b) << '\t' << rep.scattered << '\t' << rep.min_rank << '\t' << rep.is_mrd << '\t'
          << (rep.exhaustive ? "exhaustive" : "sampled") << '\t' << rep.codewords_checked << '\n';
  }
  out.json = Json{{"field_spec", to_json(ctx->spec())}, {"seed", cfg.seed}, {"reports", reports}};
  out.table = table.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattered subspace laboratory: criteria, censuses and MRD checks over F_{q^6}"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::string q_text;
  std::string modulus_text;
  bool serial = false;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "Characteristic");
    sub->add_option("--e", cfg.e, "q = p^e");
    sub->add_option("--modulus", modulus_text, "Degree-6e modulus digits, constant term first");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--serial", serial, "Single worker thread");
    sub->add_option("--workers", cfg.workers, "Worker threads (0 = hardware concurrency)");
  };
  auto add_q = [&](CLI::App* sub) { sub->add_option("--q", q_text, "Comma-separated prime powers"); };

  auto* field = app.add_subcommand("field-info", "Print the field specification and generator");
  add_field(field);
  add_q(field);
  add_common(field);

  auto* scattered = app.add_subcommand("scattered", "Decide whether U_b is maximum scattered");
  add_field(scattered);
  add_common(scattered);
  scattered->add_option("--b", cfg.b_text, "b as digit array or g^k");
  scattered->add_option("--N", cfg.n_text, "Norm N in F_{q^3} as digit array or g^k");
  scattered->add_flag("--sweep", cfg.sweep, "One b per norm");
  scattered->add_flag("--oracle", cfg.oracle, "Also run the brute-force check");

  auto* gamma = app.add_subcommand("gamma", "Enumerate the set of good norms");
  add_field(gamma);
  add_q(gamma);
  add_common(gamma);
  gamma->add_flag("--oracle", cfg.oracle, "Cross-check every norm with the brute-force check (q <= 5)");

  auto* cubics = app.add_subcommand("cubics", "Cubic polynomial census");
  add_field(cubics);
  add_q(cubics);
  add_common(cubics);

  auto* orbits = app.add_subcommand("orbits", "Frobenius orbits of the good norms");
  add_field(orbits);
  add_q(orbits);
  add_common(orbits);

  auto* mrd = app.add_subcommand("mrd", "Rank distribution of the associated code");
  add_field(mrd);
  add_common(mrd);
  mrd->add_option("--b", cfg.b_text, "b as digit array or g^k");
  mrd->add_option("--N", cfg.n_text, "Norm N as digit array or g^k");
  mrd->add_option("--scan", cfg.scan, "Check the first n scattered norm representatives");
  mrd->add_flag("--exhaustive", cfg.exhaustive, "Every codeword (q^12 <= 2^22)");
  mrd->add_option("--sample", cfg.sample, "Random codewords in sampled mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!q_text.empty()) cfg.q_list = parse_q_list(q_text);
    if (!modulus_text.empty()) cfg.modulus_override = parse_digits(modulus_text);
    cfg.format = format == "table" ? OutputFormat::Table : OutputFormat::Json;
    if (serial) cfg.workers = 1;
    cfg.seed = seed_from_env();

    Outcome out;
    if (field->parsed()) {
      out = cmd_field_info(cfg);
    } else if (scattered->parsed()) {
      out = cmd_scattered(cfg);
    } else if (gamma->parsed()) {
      out = cmd_gamma(cfg);
    } else if (cubics->parsed()) {
      out = cmd_cubics(cfg);
    } else if (orbits->parsed()) {
      out = cmd_orbits(cfg);
    } else {
      out = cmd_mrd(cfg);
    }
    if (cfg.format == OutputFormat::Json) {
      std::cout << out.json.dump(2) << '\n';
    } else {
      std::cout << out.table;
    }
    return out.ok ? kExitOk : kExitMismatch;
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const MathError& err) {
    std::cerr << "error: " << err.what() << '\n';
    switch (err.kind()) {
      case ErrorKind::OracleDisagreement:
      case ErrorKind::NotClosed:
        return kExitMismatch;
      default:
        return kExitUsage;
    }
  }
}
