#pragma once

#include <json.hpp>

#include "cclab/compress.hpp"
#include "cclab/oracle.hpp"
#include "cclab/theorems.hpp"
#include "cclab/timebounded.hpp"
#include "cclab/vm.hpp"

namespace cclab {

// Stable JSON views of every report type. nlohmann::json keeps object keys
// sorted, so serializing the same record twice yields identical bytes; the
// determinism checks rely on that.

using json = nlohmann::json;

json to_json(const ExecResult& r);
json to_json(const ComplexityRecord& r);
json to_json(const BBRecord& r);
json to_json(const ASet& a);
json to_json(const IncompressibleFraction& f);
json to_json(const Compressor& c);
json to_json(const Thm1Report& r, bool include_per_x = true);
json to_json(const Thm2Report& r);
json to_json(const MeasuredConstants& k);
json to_json(const ExtractRandomResult& r);
json to_json(const TimeBound& t);
json to_json(const FgReport& r);
json to_json(const DistinguisherReport& r);

}  // namespace cclab
