#pragma once

#include <optional>
#include <string>

#include "wqed/circuit.hpp"
#include "wqed/expfit.hpp"

namespace wqed {

enum class WqedVariant { XX, ISING };

/// Tunable-range entangler ansatz: depth layers of one waveguide gate (slots
/// T, L) followed by Rz rotations (one shared angle when global_rotation,
/// otherwise one per qubit). Parameter count: depth * (2 + 1) global,
/// depth * (2 + n) per-qubit.
Circuit build_wqed_ansatz(WqedVariant variant, int n, int depth, bool global_rotation,
                          InitialState init = InitialState::ALL_DOWN);

/// Infinite-range limit: the entangler is a fixed uniform-coupling generator
/// with a single evolution-time slot per layer.
Circuit build_ata_ansatz(WqedVariant variant, int n, int depth, bool global_rotation,
                         InitialState init = InitialState::ALL_DOWN);

/// Power-law entangler: n_exp Ising waveguide gates per layer whose (T, L)
/// slots are initialized from an exponential-sum fit of 1/r^alpha over
/// r = 1..n-1, then one global Rz. All slots stay variational unless
/// freeze_fit is set, in which case each layer keeps a single evolution
/// scale and the fitted shape is pinned.
Circuit build_powerlaw_wqed_ansatz(int n, int depth, int n_exp, double alpha,
                                   bool freeze_fit = false,
                                   InitialState init = InitialState::ALL_DOWN);

/// Hardware-efficient ansatz: per layer Rz Rx Rz on every qubit, then a
/// periodic CZ ring. 3 n depth parameters.
Circuit build_hea(int n, int depth, InitialState init = InitialState::ALL_DOWN);

/// Brick-layer ansatz (even n): per layer Ry row, CZ on links (0,1)(2,3)...,
/// Ry row, CZ on links (1,2)(3,4)...(n-1,0); one trailing Ry row after all
/// layers. 2 n depth + n parameters.
Circuit build_brick_layer(int n, int depth, InitialState init = InitialState::ALL_DOWN);

/// Hamiltonian-variational ansatz for the transverse-field Ising chain:
/// per layer exp(-i phi Hxx) exp(-i theta Hz) with Hxx = -sum XX (open) and
/// Hz = sum Z. Initial state fixed to ALL_DOWN. 2 depth parameters.
Circuit build_hva_tfim(int n, int depth);

/// Hamiltonian-variational ansatz for the XXZ chain (even n, periodic):
/// per layer six term evolutions (odd-link XX, YY, ZZ then even-link XX, YY,
/// ZZ). Initial state fixed to (|00> - |11>)/sqrt(2) pairs on the even
/// links. 6 depth parameters.
Circuit build_hva_xxz(int n, int depth);

struct AnsatzOptions {
  int n_exp = 2;         // power-law variant
  double alpha = 1.0;    // power-law fit target exponent
  bool freeze_fit = false;
  std::optional<InitialState> initial_state;  // override where not fixed
};

/// Registry keyed by the ansatz ids used in configs and reports: wqed-xx,
/// wqed-i, wqed-powerlaw, ata-xx, ata-i, hea, brick, hva-tfim, hva-xxz.
Circuit build_ansatz(const std::string& id, int n, int depth,
                     const AnsatzOptions& options = {});

}  // namespace wqed
