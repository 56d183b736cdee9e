#pragma once

#include "tcurv/driver.hpp"

#include <string>

namespace tcurv {

/// Deterministic plain-text report; byte-identical for identical inputs
/// unless with_timestamp is set.
std::string render_text(const VerificationResult& result, bool with_timestamp = false);

/// JSON report. Rationals are serialized as canonical strings ("p/q") so
/// exactness survives the wire. Key order is fixed.
std::string render_json(const VerificationResult& result, bool with_timestamp = false);

/// Connection, curvature, Ricci data of a frame, for the geometry subcommand.
std::string render_geometry_text(const GeometryCache& geom);

/// The preset coefficient table at dimension m.
std::string render_presets_text(int m);

}  // namespace tcurv
