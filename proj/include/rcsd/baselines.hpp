// SPDX-License-Identifier: Apache-2.0
//
// rc-symdet: conventional detectors — LMMSE channel estimation/equalization
// and exact maximum-likelihood sphere decoding. Both assume a linear
// per-subcarrier narrowband model; their behavior under nonlinear
// impairments is part of the experiment, not a defect.

#pragma once

#include <vector>

#include "rcsd/numerics.hpp"
#include "rcsd/ofdm.hpp"

namespace rcsd {

struct FrequencyChannelEstimate {
    std::vector<ComplexMatrix> h;  // one N_r x N_t matrix per subcarrier
    double noise_var = 0.0;        // per-subcarrier noise variance (frequency domain)
};

/// Regularized per-subcarrier least-squares channel fit over Q pilot symbols:
/// H(n)^T = (P^H P + noise_var I)^{-1} P^H Y with P the Q x N_t pilot matrix.
FrequencyChannelEstimate lmmse_channel_estimate(const std::vector<FrequencyGrid>& rx_pilot_grids,
                                                const std::vector<FrequencyGrid>& tx_pilot_grids,
                                                double noise_var);

/// Per-subcarrier LMMSE equalization: z(n) = (H^H H + noise_var I)^{-1} H^H y(n).
FrequencyGrid lmmse_equalize(const FrequencyChannelEstimate& est, const FrequencyGrid& rx_grid);

struct SphereDecodePolicy {
    /// Start with an unbounded search radius (the first depth-first descent
    /// lands on the Babai point and shrinks it). A finite initial radius is
    /// retried with a 4x larger squared radius until the sphere is non-empty.
    double initial_radius_sq = std::numeric_limits<double>::infinity();
};

struct SphereDecodeResult {
    std::vector<int> symbol_indices;  // constellation index per tx antenna
    ComplexVector symbols;
    double metric = 0.0;  // ||y - H s||^2 of the returned point
};

/// Exact maximum-likelihood detection over constellation^{N_t} via QR
/// decomposition and depth-first Schnorr-Euchner enumeration. Requires
/// N_r >= N_t. Always returns the ML point.
SphereDecodeResult sphere_decode(const ComplexMatrix& h, const ComplexVector& y,
                                 const ModulationScheme& scheme,
                                 const SphereDecodePolicy& policy = {});

}  // namespace rcsd
