#ifndef SCATTERED_REPORT_JSON_REPORT_HPP
#define SCATTERED_REPORT_JSON_REPORT_HPP

#include <json.hpp>

#include "scattered/census.hpp"
#include "scattered/equiv_mrd.hpp"
#include "scattered/scatter_criteria.hpp"

namespace scattered::report {

using Json = nlohmann::ordered_json;

Json to_json(const FieldSpec& spec);
Json to_json(const Elt& x);
Json to_json(const std::vector<Elt>& xs);
Json to_json(const ScatterVerdict& v, const Elt& b);
Json to_json(const GammaReport& r);
Json to_json(const CubicReport& r);
Json to_json(const OrbitReport& r);
Json to_json(const MrdReport& r);

Json field_info(const TowerCtx& ctx);

}  // namespace scattered::report

#endif  // SCATTERED_REPORT_JSON_REPORT_HPP
