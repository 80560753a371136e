#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hkcones/chambers.hpp"
#include "hkcones/cones.hpp"
#include "hkcones/model.hpp"
#include "hkcones/walk.hpp"
#include "hkcones/zariski.hpp"

namespace hkcones::json {

using Json = nlohmann::ordered_json;

/// Rationals as "p/q" strings, irrationals as {"a", "b", "m", "approx"};
/// approx is for display and ignored on input. Integer JSON numbers are
/// accepted on input too.
Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

Json to_json(const DivisorClass& x);
DivisorClass class_from_json(const Json& j);

Json to_json(const Ray& r);
Ray ray_from_json(const Json& j);

Json to_json(const Cone2D& c);
Cone2D cone_from_json(const Json& j);

/// Fixture format.
Json to_json(const HKModel& model);
HKModel model_from_json(const Json& j);
HKModel load_model(const std::string& path);

Json to_json(const ValidationReport& r);
ValidationReport validation_from_json(const Json& j);

Json to_json(const ZariskiDecomposition& z);
ZariskiDecomposition zariski_from_json(const Json& j);

Json to_json(const Membership& m);
Membership membership_from_json(const Json& j);

Json to_json(const LocusComponent& c);
LocusComponent component_from_json(const Json& j);
Json to_json(const std::vector<LocusComponent>& cs);
std::vector<LocusComponent> components_from_json(const Json& j);

Json to_json(const BaseLocusReport& r);
BaseLocusReport loci_from_json(const Json& j);

Json to_json(const WalkTrace& t);
WalkTrace walk_from_json(const Json& j);

Json to_json(const BZChamber& c);
BZChamber bz_from_json(const Json& j);

Json to_json(const StabilityChamber& c);
StabilityChamber chamber_from_json(const Json& j);
Json to_json(const std::vector<StabilityChamber>& cs);
std::vector<StabilityChamber> chambers_from_json(const Json& j);

Json to_json(const MoriChamber& m);
MoriChamber mori_from_json(const Json& j);

Json to_json(const DestabReport& r);
DestabReport destab_from_json(const Json& j);

}  // namespace hkcones::json
