#pragma once

#include "tcurv/manifest.hpp"
#include "tcurv/symmetry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tcurv {

enum class ModeSelection { Local, Global, Both };

/// Check groups selectable via --checks. Group names:
///   frame, curvature, paracontact, sasakian, identities, dim3,
///   symmetry, eta-parallel, theorems
struct VerifyOptions {
  std::optional<std::string> preset_name;
  std::optional<std::array<Rational, 8>> explicit_params;
  ModeSelection mode = ModeSelection::Both;
  std::optional<std::vector<std::string>> check_groups;
  bool timestamps = false;
};

/// One entry of the source-table comparison for the bundled example
/// structure: what the original table prints vs. what the engine derives.
struct Discrepancy {
  std::string id;
  std::string paper;
  std::string engine;
  bool agree;
};

/// Per-parameter-vector verdict block of a verification run.
struct PresetVerdict {
  std::string label;  // preset name or "custom"
  TParams params;
  std::optional<TheoremConditions> conditions;  // absent when skipped
  std::optional<SymmetryVerdict> local;         // absent when skipped or not requested
  std::optional<SymmetryVerdict> global;
  CheckReport cross;  // empty when skipped
  std::string skipped_reason;  // nonempty iff symmetry checks were skipped
};

struct VerificationResult {
  std::string manifest_label;
  int dim = 0;
  std::optional<Rational> epsilon;
  std::optional<GeometryCache> geometry;
  CheckReport frame_checks;
  CheckReport structure_checks;
  CheckReport paracontact_checks;
  CheckReport sasakian_checks;
  CheckReport identity_checks;
  CheckReport dim3_checks;
  CheckReport eta_parallel_checks;
  std::vector<PresetVerdict> verdicts;
  std::vector<Discrepancy> discrepancies;

  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }
};

/// Runs every selected check group that is applicable to the manifest.
/// Throws precondition_error / parse-level exceptions only for usage
/// problems; validation failures are report entries.
VerificationResult run_verification(const Manifest& manifest, const VerifyOptions& options);

/// True when the manifest is structurally the bundled example geometry
/// (the one whose published table the engine cross-checks).
bool matches_bundled_example(const Manifest& manifest);

/// Source-table comparison entries for a matching manifest (empty otherwise).
std::vector<Discrepancy> source_table_comparison(const Manifest& manifest,
                                                 const GeometryCache& geom);

}  // namespace tcurv
