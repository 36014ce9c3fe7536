// SPDX-License-Identifier: Apache-2.0
//
// rc-symdet: QAM mapping and the OFDM modulate/demodulate chain.
//
// Conventions (frozen for reproducibility):
//  - FrequencyGrid: N_sc x N_t, row n = modulation symbols of subcarrier n.
//  - TimeFrame: (N_cp + N_sc) x antennas, row t = sample t; the first N_cp
//    rows of a transmitted frame repeat the last N_cp rows (cyclic prefix).
//  - ofdm_modulate applies the 1/N-scaled inverse DFT per antenna column,
//    ofdm_demodulate the unnormalized forward DFT.
//  - Bit order: symbols are read MSB-first; a frame's bit stream iterates
//    subcarriers in the outer loop and antennas in the inner loop.
//
// Gray mapping (unit average energy):
//  - QPSK: bits (b0,b1) -> ((1-2 b0) + j (1-2 b1)) / sqrt(2).
//  - 16-QAM: I from (b0,b1), Q from (b2,b3), per-axis 00 -> +3, 01 -> +1,
//    11 -> -1, 10 -> -3, scaled by 1/sqrt(10).

#pragma once

#include <cstdint>
#include <vector>

#include "rcsd/numerics.hpp"

namespace rcsd {

using FrequencyGrid = ComplexMatrix;  // N_sc x N_t
using TimeFrame = ComplexMatrix;      // (N_cp + N_sc) x antennas
using BitVector = std::vector<std::uint8_t>;

enum class Modulation { Qpsk, Qam16 };

class ModulationScheme {
  public:
    explicit ModulationScheme(Modulation order);

    Modulation order() const { return order_; }
    int bits_per_symbol() const { return bits_per_symbol_; }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<cx>& points() const { return points_; }
    cx point(int index) const { return points_[static_cast<std::size_t>(index)]; }

    /// Index of the nearest constellation point; exact ties resolve to the
    /// lowest index.
    int nearest(cx symbol) const;

    const char* name() const { return order_ == Modulation::Qpsk ? "qpsk" : "16qam"; }

  private:
    Modulation order_;
    int bits_per_symbol_;
    std::vector<cx> points_;
};

struct SubframeConfig {
    int n_sc = 64;   // subcarriers
    int n_cp = 16;   // cyclic prefix length
    int q = 4;       // reference (training) OFDM symbols per subframe
    int n_d = 13;    // data OFDM symbols per subframe
    int n_t = 2;     // transmit antennas
    int n_r = 2;     // receive antennas

    int frame_len() const { return n_sc + n_cp; }
    /// Reference-signal overhead Q / (Q + N_d).
    double overhead_eta() const { return static_cast<double>(q) / (q + n_d); }
    void validate() const;
};

ComplexVector qam_modulate(const BitVector& bits, const ModulationScheme& scheme);
BitVector qam_demodulate(const ComplexVector& symbols, const ModulationScheme& scheme);

/// Per-antenna IFFT then cyclic-prefix insertion.
TimeFrame ofdm_modulate(const FrequencyGrid& grid, const SubframeConfig& cfg);

/// Cyclic-prefix removal then per-antenna FFT.
FrequencyGrid ofdm_demodulate(const TimeFrame& frame, const SubframeConfig& cfg);

/// Peak-to-mean power ratio in dB over all samples of the frame.
double papr_db(const TimeFrame& frame);

/// Grid construction from a frame-ordered bit stream (subcarrier-major).
FrequencyGrid grid_from_bits(const BitVector& bits, const ModulationScheme& scheme,
                             const SubframeConfig& cfg);

/// Frame-ordered hard decisions on a (possibly noisy) grid estimate.
BitVector bits_from_grid(const FrequencyGrid& grid, const ModulationScheme& scheme);

}  // namespace rcsd
