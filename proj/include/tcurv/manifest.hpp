#pragma once

#include "tcurv/frame.hpp"
#include "tcurv/paracontact.hpp"
#include "tcurv/tcurvature.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tcurv {

/// How a manifest names its family parameters: a preset name, or an explicit
/// coefficient vector. Exactly one is set.
struct TParamsSource {
  std::optional<std::string> preset;
  std::optional<std::array<Rational, 8>> explicit_params;

  friend bool operator==(const TParamsSource&, const TParamsSource&) = default;
};

/// Parsed manifest file. Leading full-line comments are kept as metadata and
/// re-emitted on serialization; interior comments are not.
struct Manifest {
  std::optional<std::string> name;
  std::vector<std::string> comments;
  FrameSpec frame;
  std::optional<ParacontactSpec> pc;
  std::optional<TParamsSource> tparams;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// Line-oriented format. '#' starts a comment; LF or CRLF line endings.
/// Sections: [manifold] (keys name, dim, epsilon), [metric] (dim rows of dim
/// rationals), [brackets] ("i j = k:coeff k:coeff ...", i < j, omitted pairs
/// zero), [phi] (dim rows; row i holds the components of phi e_i), [xi] and
/// [eta] (one row each), [tparams] ("preset = name" or keys a0..a7).
/// Throws parse_error with a 1-based line number.
Manifest parse_manifest(std::string_view text);

/// Canonical serialization; parse(serialize(m)) == m.
std::string serialize_manifest(const Manifest& m);

}  // namespace tcurv
