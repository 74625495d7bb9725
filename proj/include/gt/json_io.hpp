#ifndef GT_JSON_IO_HPP
#define GT_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "gt/gg.hpp"

namespace gt {

using json = nlohmann::json;

// Tableau: {"n": 3, "anchors": {"a": "1/2"}, "rows": [[top...], ..., [bottom]]}.
// An entry is an integer, a rational string "p/q" (its integral shift class is
// derived from the fractional part), or {"anchor": "a", "offset": 3}.
json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

// RelationSet: {"n": 3, "relations": [{"from": [2,1], "rel": ">", "to": [3,1]}]}.
json relation_set_to_json(const RelationSet& c);
RelationSet relation_set_from_json(const json& j);

// FormalVector: [{"coeff": "p/q", "tableau": {...}}, ...].
json formal_vector_to_json(const FormalVector& v);
FormalVector formal_vector_from_json(const json& j);

json fingerprint_to_json(const Fingerprint& f);
json report_to_json(const VerificationReport& r);
json check_failure_to_json(const CheckFailure& f);
json gg_verdict_to_json(const GGVerdict& v);
json tableau_module_report_to_json(const TableauModuleReport& r);

// CLI/C-API entry point: {"verb": "...", ...args} -> response JSON; the exit
// code is 0 (check passed), 1 (check failed / not a module), 2 (input error).
json run_command(const json& request, int& exit_code);

}  // namespace gt

#endif
