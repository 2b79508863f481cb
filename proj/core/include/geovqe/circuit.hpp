#pragma once

#include <vector>

#include "geovqe/fermion.hpp"
#include "geovqe/state.hpp"

namespace geovqe {

/// |psi> = prod_t exp(-i theta_t G_{j_t}) |ref>, applied in element order.
StateVector prepare_state(const Ansatz& ansatz, const OperatorPool& pool,
                          const StateVector& ref);

/// Partial derivative of the prepared state with respect to theta at element
/// `position` (0-based): U_{>pos} (-i G) U_{<=pos} |ref>.
StateVector derivative_state(const Ansatz& ansatz, const OperatorPool& pool,
                             const StateVector& ref, std::size_t position);

/// Prepared state together with all parameter-derivative states, computed in
/// one forward sweep.  derivs[t] equals derivative_state(..., t).
struct TangentFrame {
  StateVector psi;
  std::vector<StateVector> derivs;
};

TangentFrame tangent_frame(const Ansatz& ansatz, const OperatorPool& pool,
                           const StateVector& ref);

/// dE/dtheta_t = 2 Re<psi|H|d_t psi> for all elements, via one backward sweep
/// (O(k) generator applications).
std::vector<double> energy_gradient(const PauliSum& h, const Ansatz& ansatz,
                                    const OperatorPool& pool, const StateVector& ref);

/// Same gradient read off a precomputed frame (used when the metric is needed
/// anyway).
std::vector<double> energy_gradient(const PauliSum& h, const TangentFrame& frame);

/// Energy of the state with exp(-i beta O) inserted after the first `position`
/// elements of the ansatz (position == size means append).
double inserted_trial_energy(const PauliSum& h, const Ansatz& ansatz,
                             const OperatorPool& pool, const StateVector& ref,
                             const PauliSum& op, double beta, std::size_t position);

}  // namespace geovqe
