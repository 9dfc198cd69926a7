#pragma once

#include <json.hpp>

#include "matforms/calibration.hpp"
#include "matforms/generators.hpp"
#include "matforms/oracle.hpp"
#include "matforms/quiver_o.hpp"
#include "matforms/sigma_ring.hpp"

namespace matforms::cli {

using nlohmann::json;

json to_json(const SigmaPoly& f);
json to_json(const MixedElement& f);
json to_json(const Verdict& v);
json to_json(const GeneratorSpec& g);
json to_json(const GeneratorResult& r);
json to_json(const SuiteReport& r);
json to_json(const BijectionReport& r);
json to_json(const CalibrationCheck& c);

}  // namespace matforms::cli
