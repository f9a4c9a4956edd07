#pragma once

#include <json.hpp>

#include "contact_census/contfrac.hpp"
#include "contact_census/divsets.hpp"
#include "contact_census/farey.hpp"
#include "contact_census/lens.hpp"
#include "contact_census/slices.hpp"

namespace contact_census {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// A fresh document with "schema" as its first key.
Json document();

Json to_json(const Slope& s);
Slope slope_from_json(const Json& j);

Json to_json(const NegContFrac& cf);
Json to_json(const std::vector<Slope>& path);

// {"cf", "counts", "euler", "universally_tight"}
Json to_json(const MinimalDescriptor& d);
MinimalDescriptor minimal_from_json(const Json& j);

// {"chain", "signs"}
Json to_json(const SliceFactorization& f);
SliceFactorization factorization_from_json(const Json& j);

Json to_json(const LensDescriptor& d);
LensDescriptor lens_from_json(const Json& j);
Json to_json(const SolidTorusDescriptor& d);
SolidTorusDescriptor solid_torus_from_json(const Json& j);

Json to_json(const TwistingData& t);

Json to_json(const DiskConfig& c);
DiskConfig disk_from_json(const Json& j);

// {"inner", "outer", "arcs": [[[side, index], [side, index], winding], ...]}
Json to_json(const AnnulusConfig& c);
AnnulusConfig annulus_from_json(const Json& j);

Json to_json(const ConfigSet& set);
Json to_json(const GlueOutcome& g);

// Parses text and rethrows JSON errors as Error(Parse).
Json parse_json(const std::string& text);

}  // namespace contact_census
