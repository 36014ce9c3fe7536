// SPDX-License-Identifier: Apache-2.0
//
// rc-symdet: fixed-weight echo state network — weight initialization and the
// state recursion. Only the readout layers elsewhere are ever trained.

#pragma once

#include <cstdint>

#include "rcsd/numerics.hpp"
#include "rcsd/rng.hpp"

namespace rcsd {

struct ReservoirSpec {
    int n_neurons = 64;
    int window_len = 16;              // sliding input buffer length
    double spectral_radius_target = 0.8;
    double w_s_sparsity = 0.1;        // fraction of nonzero recurrent weights
    double input_scale = 0.3;
    double state_noise_std = 0.0;     // optional state-noise regularizer
    int washout = 0;                  // leading states dropped from training stacks
    double ridge = 0.0;               // readout regularizer; 0 = pure pseudo-inverse
    void validate() const;
};

struct ReservoirWeights {
    RealMatrix w_s;    // n_neurons x n_neurons, sparse random, scaled spectral radius
    RealMatrix w_in;   // (window_len * input_width) x n_neurons, uniform
    RealMatrix w_fb;   // feedback path, identically zero (teacher forcing unused)
    int window_len = 1;
    int input_width = 1;

    int n_neurons() const { return static_cast<int>(w_s.rows()); }
};

/// Draws the fixed random weights for one reservoir. The recurrent matrix
/// has an exact nonzero count of round(sparsity * n^2) and is rescaled so
/// its spectral radius equals the target. Deterministic per seed.
ReservoirWeights init_reservoir(const ReservoirSpec& spec, int input_width, std::uint64_t seed);

/// Sliding-window input expansion: row t holds [x(t), x(t-1), ...,
/// x(t-window+1)] flattened, zero-padded before t = 0.
ComplexMatrix build_windowed_input(const ComplexMatrix& input, int window_len);

/// Runs the state recursion s(t+1) = tanh(s(t) W_s + u(t) W_in [+ n(t)])
/// with split complex activation (tanh on real and imaginary parts
/// independently). Returns one state row per input row; row 0 is the
/// initial state (zero unless given).
ComplexMatrix run_reservoir(const ReservoirWeights& weights, const ComplexMatrix& input,
                            double state_noise_std = 0.0, Rng* noise_rng = nullptr,
                            const ComplexVector* initial_state = nullptr);

}  // namespace rcsd
