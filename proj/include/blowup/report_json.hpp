#pragma once

#include "json.hpp"

#include "blowup/pipeline.hpp"

namespace blowup {

// The JSON document emit_report serializes. Exposed so tests can state the
// round-trip property (parse of the emitted text equals this object).
nlohmann::ordered_json report_json(const Report& report);

}  // namespace blowup
