#pragma once

#include <string>

#include "json.hpp"
#include "qca/builders.hpp"
#include "qca/qtorus.hpp"
#include "qca/tropical.hpp"
#include "qca/uq.hpp"

namespace qca {

using nlohmann::json;

json element_to_json(const TorusElement& f, const std::string& seed_ref = "");
TorusElement element_from_json(const json& j, const SeedPtr& seed);

json triangle_to_json(const TriangleQuiver& t);
json disk_to_json(const DiskSeed& d);
// accepts a bare quiver, a triangle or a disk document
IceQuiver quiver_from_any(const json& j);
DiskSeed disk_from_json(const json& j);

json datum_to_json(const LusztigDatum& d);
LusztigDatum datum_from_json(const json& j, int r);
json weight_to_json(const WeightPair& w);
json report_to_json(const Report& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace qca
