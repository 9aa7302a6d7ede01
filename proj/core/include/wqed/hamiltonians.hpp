#pragma once

#include <string>

#include "wqed/pauli.hpp"
#include "wqed/spectral.hpp"
#include "wqed/state.hpp"

namespace wqed {

enum class Boundary { OPEN, PERIODIC };

/// XXZ chain: sum_bonds (X X + Y Y) - delta * sum_bonds Z Z.
PauliOperator build_xxz(int n, double delta, Boundary bc = Boundary::OPEN);

/// Transverse-field Ising chain: -sum_bonds X X + g * sum_i Z.
PauliOperator build_tfim(int n, double g, Boundary bc = Boundary::OPEN);

/// Long-range transverse-field Ising model on an open chain with unit
/// spacing: -sin(theta) * sum_{i != j} |i-j|^{-alpha} X_i X_j
///          + cos(theta) * sum_i Z_i.
/// The double sum runs over both orderings, i.e. each unordered pair carries
/// weight 2 sin(theta) |i-j|^{-alpha}.
PauliOperator build_lrtfim(int n, double alpha, double theta);

/// Waveguide-mediated exchange: sum over unordered pairs of
/// J e^{-|i-j|/L} (X X + Y Y)/2 (the flip-flop coupling).
PauliOperator build_wqed_xx(int n, double j, double l);

/// Waveguide-mediated Ising coupling: each unordered pair carries
/// 2 J e^{-|i-j|/L} X X (double-counted sum convention, as in build_lrtfim).
PauliOperator build_wqed_ising(int n, double j, double l);

/// Infinite-range limits of the two couplings above (uniform weights).
PauliOperator build_ata_xx(int n, double j);
PauliOperator build_ata_ising(int n, double j);

/// Field / bond sums used as interpolation anchors and circuit generators.
PauliOperator sum_z(int n);
PauliOperator sum_zz(int n, Boundary bc = Boundary::OPEN);
PauliOperator sum_xx_nn(int n, Boundary bc = Boundary::OPEN);

/// (1 - s) h0 + s htarget, s in [0, 1].
PauliOperator build_cost(double s, const PauliOperator& h0, const PauliOperator& htarget);

/// Smallest theta on the grid {step, 2 step, ...} < pi/2 at which the gap
/// between the ground multiplet and the first level above it drops below
/// 1/n^2. Throws if the grid is exhausted without meeting the criterion.
double critical_theta(int n, double alpha, double grid_step = 0.01);

// ---- model description shared by the CLI harness and records -------------

enum class ModelKind { XXZ, TFIM, LRTFIM };

struct ModelSpec {
  ModelKind kind = ModelKind::TFIM;
  int n_qubits = 2;
  Boundary boundary = Boundary::OPEN;
  double delta = 1.0;   // XXZ anisotropy
  double g = 1.0;       // TFIM field
  double alpha = 1.0;   // LRTFIM interaction exponent
  double theta = -1.0;  // LRTFIM angle; negative = locate the critical point
};

/// Target Hamiltonian for a model. For LRTFIM with theta < 0 the critical
/// angle is located first (grid 0.01).
PauliOperator build_model(const ModelSpec& spec);

/// Interpolation start Hamiltonian: sum ZZ for XXZ, sum Z otherwise.
PauliOperator build_h0(const ModelSpec& spec);

/// Product state the hardware would be initialized in for this model
/// (ground state of build_h0): NEEL for XXZ, ALL_DOWN otherwise.
InitialState model_initial_state(ModelKind kind);

std::string model_kind_name(ModelKind kind);
ModelKind model_kind_from_name(const std::string& name);

}  // namespace wqed
