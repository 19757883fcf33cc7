// closed_forms.hpp: Explicit exceptional eigenstates of the equal-coupling
// model. None of these check that their existence condition holds; pair them
// with condition() or fock_subspace_check().

#pragma once

#include "tqrabi/exceptional.hpp"

namespace tqr::closed_form {

/// Singlet (|N,g,e> - |N,e,g>)/sqrt2, E = N w - Jx - Jy - Jz. Needs delta1 = delta2.
ExceptionalState dark(const ModelParams& params, int n_index);

/// Even N = 1 state for delta1 + delta2 = w, J = 0:
///   (2(D1-D2)/g |0,e,e> - |1,e,g> + |1,g,e>) / N.
ExceptionalState psi_e(const ModelParams& params);

/// Odd N = 1 states for D1 - D2 = w and D2 - D1 = w, J = 0:
///   (2(D1+D2)/g |0,e,g> + |1,g,g> - |1,e,e>) / N   and the same with |0,g,e>.
ExceptionalState psi_g1(const ModelParams& params);
ExceptionalState psi_g2(const ModelParams& params);

/// Even N = 1 state of the XYZ model, E = w - Jx - Jy - Jz. With a = 1 - 2Jy - 2Jz:
///   (a - D1 - D2)|0,g,g> + (a + D1 + D2)|0,e,e> + a g/(D1-D2) (|1,g,e> - |1,e,g>).
ExceptionalState psi_e1(const ModelParams& params);

/// Odd partner of psi_e1: flip the signs of D1, Jy, Jz and the first qubit.
ExceptionalState psi_e1_odd(const ModelParams& params);

/// Even N = 3 state of the XYZ model for Jx + Jy + 2Jz = 2, E = 3w - Jx - Jy - Jz.
ExceptionalState psi_e3(const ModelParams& params);

}  // namespace tqr::closed_form
