#pragma once

#include <string>

#include "json.hpp"

#include "arrfree/arrangement.hpp"
#include "arrfree/freeness.hpp"
#include "arrfree/lattice.hpp"
#include "arrfree/log_modules.hpp"
#include "arrfree/restriction.hpp"
#include "arrfree/series.hpp"

namespace arrfree {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

ojson poly_to_json(const UniPoly& p);
ojson multipoly_to_json(const MultiPoly& p);
ojson lattice_to_json(const Arrangement& arr, const IntersectionLattice& lat);
ojson derivation_to_json(const Derivation& d);
/// Embeds the arrangement so the certificate can be checked on its own.
ojson certificate_to_json(const Multiarrangement& ma, const FreenessCertificate& cert);
/// Inverse of certificate_to_json; throws FormatError on malformed input.
FreenessCertificate certificate_from_json(const nlohmann::json& j, Multiarrangement& ma);
ojson restriction_to_json(const RestrictionData& rd);
ojson hilbert_to_json(const HilbertFunction& hf);
ojson series_to_json(const RationalSeries& s);
ojson bivariate_to_json(const BivariateSeries& s);
ojson theorem1_to_json(const Theorem1Report& rep);

/// Wraps a payload with the schema name and version.
ojson envelope(const std::string& kind, ojson payload);

}  // namespace arrfree
