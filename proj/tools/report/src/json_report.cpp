#include "scattered_report/json_report.hpp"

namespace scattered::report {

Json to_json(const FieldSpec& spec) {
  return Json{{"p", spec.p}, {"e", spec.e}, {"modulus", spec.modulus}};
}

Json to_json(const Elt& x) { return x.ctx()->to_digits(x); }

Json to_json(const std::vector<Elt>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_json(x));
  return arr;
}

Json to_json(const ScatterVerdict& v, const Elt& b) {
  Json j{{"b", to_json(b)}, {"N", to_json(v.N)}, {"scattered", v.scattered}, {"route", to_string(v.route)}};
  if (v.witness_m) j["witness_m"] = to_json(*v.witness_m);
  return j;
}

Json to_json(const GammaReport& r) {
  Json j;
  j["q"] = r.q;
  j["p"] = r.field_spec.p;
  j["e"] = r.field_spec.e;
  j["modulus"] = r.field_spec.modulus;
  j["size"] = r.size;
  j["conjecture_value"] = r.conjecture_value;
  j["closed_form_value"] = r.closed_form_value;
  j["match"] = r.matches_conjecture && r.matches_closed_form;
  j["oracle_checked"] = r.oracle_checked;
  j["gamma"] = to_json(r.gamma);
  return j;
}

Json to_json(const CubicReport& r) {
  Json j;
  j["q"] = r.q;
  j["parity"] = r.parity == Parity::Odd ? "odd" : "even";
  j["total"] = r.total;
  j["gamma0"] = r.gamma[0];
  j["gamma1"] = r.gamma[1];
  j["gamma2"] = r.gamma[2];
  j["gamma3"] = r.gamma[3];
  j["rooted_pairs"] = r.rooted_pairs;
  j["conjroot_pairs"] = r.conjroot_pairs;
  j["conjroot_polynomials"] = r.conjroot_polynomials;
  j["triple_root_count"] = r.triple_root_count;
  j["double_root_count"] = r.double_root_count;
  j["gamma_size"] = r.gamma_size;
  auto table = [](const std::vector<CensusEntry>& entries) {
    Json arr = Json::array();
    for (const auto& e : entries) {
      arr.push_back(Json{{"name", e.name}, {"expected", e.expected}, {"actual", e.actual}, {"match", e.match()}});
    }
    return arr;
  };
  j["expected"] = table(r.expected);
  j["consistency"] = table(r.consistency);
  j["match"] = r.all_match();
  return j;
}

Json to_json(const OrbitReport& r) {
  Json sizes = Json::array();
  for (const auto& o : r.orbits) sizes.push_back(o.size());
  Json j;
  j["gamma_size"] = r.gamma_size;
  j["orbit_count"] = r.orbit_count;
  j["lower_bound"] = Json{{"numerator", r.gamma_size}, {"denominator", r.bound_denominator}};
  j["frobenius_closed"] = r.frobenius_closed;
  j["orbit_sizes_divide_3e"] = r.orbit_sizes_divide;
  j["meets_bound"] = r.meets_bound();
  j["orbit_sizes"] = sizes;
  return j;
}

Json to_json(const MrdReport& r) {
  Json dist = Json::array();
  for (const auto& [rank, count] : r.rank_distribution) dist.push_back(Json::array({rank, count}));
  Json j;
  j["b"] = to_json(r.b);
  j["N"] = to_json(r.b.ctx()->norm_q6_q3(r.b));
  j["scattered"] = r.scattered;
  j["code_dimension_over_Fp"] = r.code_dimension_over_fp;
  j["mode"] = r.exhaustive ? "exhaustive" : "sampled";
  j["codewords_checked"] = r.codewords_checked;
  if (!r.exhaustive) j["sample_size"] = r.sample_size;
  j["min_rank"] = r.min_rank;
  j["rank_distribution"] = dist;
  j["is_mrd"] = r.is_mrd;
  return j;
}

Json field_info(const TowerCtx& ctx) {
  Json factors = Json::array();
  for (const auto& [prime, mult] : ctx.group_order_factors()) factors.push_back(Json::array({prime, mult}));
  Json j;
  j["field_spec"] = to_json(ctx.spec());
  j["q"] = ctx.q();
  j["degree"] = ctx.degree();
  j["field_order"] = ctx.field_order();
  j["irreducible"] = detail::is_irreducible(ctx.p(), ctx.spec().modulus);
  j["generator"] = to_json(ctx.generator());
  j["group_order_factors"] = factors;
  return j;
}

}  // namespace scattered::report
