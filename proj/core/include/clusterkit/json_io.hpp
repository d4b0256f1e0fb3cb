// Stable JSON (de)serialization for matrices, Laurent polynomials, polytopes
// and fans, plus atomic file output. Big integers travel as decimal strings;
// exponent vectors as plain JSON integers.
#pragma once

#include "clusterkit/cones.hpp"
#include "clusterkit/laurent.hpp"
#include "clusterkit/polytope.hpp"

#include <string>

#include "json.hpp"

namespace ck {

using Json = nlohmann::json;

Json matrix_to_json(const ZMat& m);
ZMat matrix_from_json(const Json& j);

ExchangeMatrix exchange_from_json(const Json& j);

Json laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j, int n);

Json vec_to_json(const ZVec& v);
ZVec vec_from_json(const Json& j);

Json polytope_to_json(const WeightedPolytope& p);
WeightedPolytope polytope_from_json(const Json& j);

Json fan_to_json(const Fan& f);

// Writes text to `path` atomically (temp file in the same directory, then
// rename). Creates or replaces the target.
void write_file_atomic(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

} // namespace ck
