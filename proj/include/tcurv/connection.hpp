#pragma once

#include "tcurv/frame.hpp"
#include "tcurv/tensor.hpp"

namespace tcurv {

/// Connection coefficients: nabla_{e_i} e_j = sum_k Gamma^k_ij e_k,
/// stored as gamma(k,i,j).
struct Connection {
  Tensor gamma;

  static Connection zero(int dim) {
    return Connection{Tensor(dim, {Slot::Up, Slot::Down, Slot::Down})};
  }
};

/// Levi-Civita connection of a constant-metric frame. With g constant the
/// derivative terms of the Koszul formula vanish, leaving
///   2 g(nabla_{e_i} e_j, e_k) = -g(e_i,[e_j,e_k]) - g(e_j,[e_i,e_k]) + g(e_k,[e_i,e_j]).
/// Refuses invalid frames by throwing invalid_frame_error with the report.
Connection koszul_connection(const FrameSpec& spec);

/// T^k_ij = Gamma^k_ij - Gamma^k_ji - c^k_ij; zero iff torsion-free.
Tensor torsion_defect(const FrameSpec& spec, const Connection& conn);

/// M_kij = sum_l (Gamma^l_ki g_lj + Gamma^l_kj g_il); zero iff nabla g = 0.
Tensor metricity_defect(const FrameSpec& spec, const Connection& conn);

}  // namespace tcurv
