#pragma once

#include <string>

#include "json.hpp"
#include "lieindex/indexcalc.hpp"
#include "lieindex/paraquasi.hpp"
#include "lieindex/realform.hpp"

namespace lieindex {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& s);  // throws std::invalid_argument

Json cascade_json(SimpleType t);
Json analysis_json(const RealForm& rf);
Json index_json(const IndexReport& r, const std::string& subalgebra);
Json table4_json(const Table4Row& row);

// One renderer per format; text and csv are derived from the JSON value.
std::string render(const Json& j, Format f);

}  // namespace lieindex
