#pragma once

#include <json.hpp>

#include "aec/coloring.hpp"
#include "aec/density.hpp"
#include "aec/embedding.hpp"
#include "aec/graph.hpp"
#include "aec/structure.hpp"

namespace aec {

using Json = nlohmann::json;

Json certificate_json(const DensityCertificate& cert);
Json reducible_json(const Reducible& r);
Json charge_report_json(const ChargeReport& rep);
Json bounds_json(const BoundsReport& rep);
Json verify_report_json(const VerifyReport& rep);

Json coloring_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const Json& j);

Json lists_json(const ListAssignment& l);
// {"k": int} expands to uniform lists over g's edges; {"lists": [[u,v,[...]]]}
// is taken verbatim.
ListAssignment lists_from_json(const Json& j, const Graph& g);

Json drawing_json(const Drawing& d);
// Strict: exactly the fields n / edges / crossings / rotation, rotation
// keyed by every node id.
Drawing drawing_from_json(const Json& j);

Json step_json(const EliminationStep& s);
Json failure_json(const FailureReport& f);
Json drawing_errors_json(const std::vector<DrawingError>& errs);

}  // namespace aec
