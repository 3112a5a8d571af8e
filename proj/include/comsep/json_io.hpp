#pragma once

#include <json.hpp>

#include <string>

#include "comsep/generators.hpp"
#include "comsep/kirchberger.hpp"
#include "comsep/realizable.hpp"

namespace comsep {

using json = nlohmann::ordered_json;

/// Input rejected by a decoder. The message names the offending location:
/// a byte offset for syntax errors, a JSON path for schema errors.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Parses text, converting syntax errors into FormatError with the offset.
json parse_json(const std::string& text, const std::string& source);
json read_json_file(const std::string& path);

/// {"elements": [...], "covectors": ["+-0", ...]}
json encode_system(const SignSystem& m);
SignSystem decode_system(const json& j);

json encode_set(const GroundSet& ground, ElementSet s);
ElementSet decode_set(const GroundSet& ground, const json& j, const std::string& where);

/// {"dim": 2, "points": [{"id": "s1", "coords": ["0", "1/2"], "label": "V"}, ...]}
json encode_points(const PointConfiguration& p);
PointConfiguration decode_points(const json& j);

/// {"a": ["1", "-1/2"], "alpha": "3"}
json encode_functional(const AffineFunctional& f);
AffineFunctional decode_functional(const json& j, std::size_t dim);

json encode_witness(const SignSystem& m, const WitnessReport& w);

/// {"system": ..., "target": "+-...", "variant": ..., "claim": ..., "witness": {...}}
json encode_record(const CounterexampleRecord& r);

/// Corpus dump line: {"seed": ..., "index": ..., "elements": ..., "covectors": ...}
json encode_instance(const CorpusInstance& inst);

}  // namespace comsep
