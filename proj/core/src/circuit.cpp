#include "geovqe/circuit.hpp"

#include <stdexcept>

namespace geovqe {

namespace {

const PauliSum& pool_op(const OperatorPool& pool, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= pool.size())
    throw std::invalid_argument("ansatz refers to a pool index that does not exist");
  return pool.generators[static_cast<std::size_t>(index)].op;
}

StateVector apply_neg_i_generator(const PauliSum& g, const StateVector& s) {
  StateVector out = apply_pauli_sum(g, s);
  for (cplx& a : out.amplitudes()) a *= cplx{0.0, -1.0};
  return out;
}

}  // namespace

StateVector prepare_state(const Ansatz& ansatz, const OperatorPool& pool,
                          const StateVector& ref) {
  StateVector s = ref;
  for (const auto& e : ansatz.elements)
    s = apply_exp_generator(s, pool_op(pool, e.pool_index), e.theta);
  return s;
}

StateVector derivative_state(const Ansatz& ansatz, const OperatorPool& pool,
                             const StateVector& ref, std::size_t position) {
  if (position >= ansatz.size())
    throw std::invalid_argument("derivative_state: position out of range");
  StateVector s = ref;
  for (std::size_t t = 0; t <= position; ++t)
    s = apply_exp_generator(s, pool_op(pool, ansatz.elements[t].pool_index),
                            ansatz.elements[t].theta);
  s = apply_neg_i_generator(pool_op(pool, ansatz.elements[position].pool_index), s);
  for (std::size_t t = position + 1; t < ansatz.size(); ++t)
    s = apply_exp_generator(s, pool_op(pool, ansatz.elements[t].pool_index),
                            ansatz.elements[t].theta);
  return s;
}

TangentFrame tangent_frame(const Ansatz& ansatz, const OperatorPool& pool,
                           const StateVector& ref) {
  TangentFrame frame;
  frame.psi = ref;
  frame.derivs.reserve(ansatz.size());
  for (const auto& e : ansatz.elements) {
    const PauliSum& g = pool_op(pool, e.pool_index);
    frame.psi = apply_exp_generator(frame.psi, g, e.theta);
    for (StateVector& d : frame.derivs) d = apply_exp_generator(d, g, e.theta);
    frame.derivs.push_back(apply_neg_i_generator(g, frame.psi));
  }
  return frame;
}

std::vector<double> energy_gradient(const PauliSum& h, const Ansatz& ansatz,
                                    const OperatorPool& pool, const StateVector& ref) {
  const std::size_t k = ansatz.size();
  std::vector<double> grad(k, 0.0);
  if (k == 0) return grad;

  // Backward sweep: xi = U_{>t}^dag H|psi>, phi = U_{<=t}|ref>, and
  // dE/dtheta_t = 2 Re<xi|(-i G_t)|phi> = 2 Im<xi|G_t|phi>.
  StateVector phi = prepare_state(ansatz, pool, ref);
  StateVector xi = apply_pauli_sum(h, phi);
  for (std::size_t t = k; t-- > 0;) {
    const PauliSum& g = pool_op(pool, ansatz.elements[t].pool_index);
    grad[t] = 2.0 * xi.inner(apply_pauli_sum(g, phi)).imag();
    if (t > 0) {
      const double theta = ansatz.elements[t].theta;
      phi = apply_exp_generator(phi, g, -theta);
      xi = apply_exp_generator(xi, g, -theta);
    }
  }
  return grad;
}

std::vector<double> energy_gradient(const PauliSum& h, const TangentFrame& frame) {
  const StateVector h_psi = apply_pauli_sum(h, frame.psi);
  std::vector<double> grad(frame.derivs.size(), 0.0);
  for (std::size_t t = 0; t < frame.derivs.size(); ++t)
    grad[t] = 2.0 * h_psi.inner(frame.derivs[t]).real();
  return grad;
}

double inserted_trial_energy(const PauliSum& h, const Ansatz& ansatz,
                             const OperatorPool& pool, const StateVector& ref,
                             const PauliSum& op, double beta, std::size_t position) {
  if (position > ansatz.size())
    throw std::invalid_argument("inserted_trial_energy: position out of range");
  StateVector s = ref;
  for (std::size_t t = 0; t < position; ++t)
    s = apply_exp_generator(s, pool_op(pool, ansatz.elements[t].pool_index),
                            ansatz.elements[t].theta);
  s = apply_exp_generator(s, op, beta);
  for (std::size_t t = position; t < ansatz.size(); ++t)
    s = apply_exp_generator(s, pool_op(pool, ansatz.elements[t].pool_index),
                            ansatz.elements[t].theta);
  return expectation(h, s);
}

}  // namespace geovqe
