#pragma once

#include "tcurv/paracontact.hpp"
#include "tcurv/tcurvature.hpp"

#include <array>
#include <optional>

namespace tcurv {

enum class SymmetryMode { Local, Global };

/// Outcome of a phi-T-symmetry check. The defect tensor is
/// phi^2((nabla_W T)(X,Y)Z); the check passes iff every probed entry is
/// exactly zero. A failing verdict carries the maximal-magnitude entry
/// (first in (w,i,j,k,l) order among maximal) as witness, 1-based.
struct SymmetryVerdict {
  SymmetryMode mode;
  TParams params;
  Rational defect_max_entry;
  std::optional<std::array<int, 5>> witness;  // (w,i,j,k,l)

  bool pass() const { return defect_max_entry.is_zero(); }
};

/// Full defect tensor phi^2(nabla T), valence (Down w, Up l, Down i, Down j, Down k).
/// Refuses (precondition_error) when validate_eps_ps fails upstream.
Tensor phi_t_defect(const FrameSpec& spec, const ParacontactSpec& pc, const GeometryCache& geom,
                    const TParams& params);

/// Global: defect zero over all indices. Local: zero for w,i,j,k restricted
/// to horizontal frame indices (adapted frame required; adapted_frame_error
/// otherwise).
SymmetryVerdict phi_t_symmetry_check(const FrameSpec& spec, const ParacontactSpec& pc,
                                     const GeometryCache& geom, const TParams& params,
                                     SymmetryMode mode);

/// (nabla_X S)(phi Y, phi Z) = 0 over all frame triples, plus the model-class
/// consequence that the scalar curvature is constant.
CheckReport eta_parallel_ricci_check(const FrameSpec& spec, const ParacontactSpec& pc,
                                     const GeometryCache& geom);

enum class TheoremVerdict { EinsteinClass, ConstantRClass, NoVerdict };

/// Coefficient conditions of the global/local symmetry theorems:
///   c1 = a0 + (m-1)a1 + a2 + a6      (Einstein condition)
///   c2 = a4 + (m-1)a7                 (constant scalar curvature condition)
///   c3 = a0 + a1 + a4 + 2a7, c4 = a0 - a2 - a5 + 2a7, c5 = a3 + a6
/// verdict: EinsteinClass iff c1 != 0; ConstantRClass iff c1 = 0 and c2 != 0;
/// NoVerdict iff c1 = c2 = 0. thm41_applicable iff (c3,c4,c5) not all zero.
struct TheoremConditions {
  Rational c1, c2, c3, c4, c5;
  TheoremVerdict verdict;
  bool thm41_applicable;
};

TheoremConditions theorem_conditions(const TParams& params, int m);

/// Cross-validation of theorem statements on a validated 3-d structure:
///  (a) thm41_applicable implies the local check passes (r constant here);
///  (b) on Einstein input the global defect equals a0 times the
///      riemann-preset global defect, tensor-exactly;
///  (c) eta-parallel Ricci implies the local check passes.
CheckReport cross_validate_theorems(const FrameSpec& spec, const ParacontactSpec& pc,
                                    const GeometryCache& geom, const TParams& params);

const char* to_string(TheoremVerdict v);
const char* to_string(SymmetryMode m);

}  // namespace tcurv
