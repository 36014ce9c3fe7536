// SPDX-License-Identifier: Apache-2.0
//
// rc-symdet: transmit/receive impairment chain: power-amplifier compression,
// tap-delay-line MIMO channel, additive noise, and ADC quantization.

#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "rcsd/numerics.hpp"
#include "rcsd/ofdm.hpp"
#include "rcsd/rng.hpp"

namespace rcsd {

struct PaConfig {
    bool enabled = true;
    double rho = 3.0;               // smoothing parameter
    double x_sat = 1.0;             // saturation amplitude
    double input_backoff_db = 8.0;  // IBO: saturation power over mean input power
    void validate() const;
};

struct AdcConfig {
    bool enabled = false;
    int bits = 4;
    /// Fixed clip amplitude; 0 selects automatic per-antenna clipping at
    /// auto_rms_multiplier times the received RMS.
    double a_max = 0.0;
    double auto_rms_multiplier = 3.0;
    void validate() const;
    double step(double clip) const { return 2.0 * clip / ((1 << bits) - 1); }
};

struct ChannelProfile {
    enum class Kind { Rayleigh, Identity };
    Kind kind = Kind::Rayleigh;
    int l_taps = 8;
    double decay_db_per_tap = 3.0;  // exponential power-delay profile
};

struct ChannelRealization {
    // taps[l] is the N_r x N_t coupling matrix at delay l.
    std::vector<ComplexMatrix> taps;
    int l_taps() const { return static_cast<int>(taps.size()); }
};

struct NoiseConfig {
    double snr_db = 15.0;  // received SNR; +infinity disables noise
    static constexpr double kNoNoise = std::numeric_limits<double>::infinity();
};

/// RAPP AM/AM compression of a single sample; phase preserved.
cx rapp_pa(cx x, const PaConfig& cfg);

/// Realized input back-off of a frame against a saturation amplitude.
double ibo_db(const TimeFrame& frame, double x_sat);

/// Gain that brings a signal of the given mean power to the configured IBO.
double pa_input_gain(const PaConfig& cfg, double mean_input_power);

/// Scales the frame by `gain`, then applies RAPP compression elementwise.
/// Returns the frame untouched when the PA is disabled.
TimeFrame apply_pa(const TimeFrame& frame, const PaConfig& cfg, double gain);

/// Mid-rise uniform quantizer with clipping, applied to one real sample.
double quantize_adc(double x, double step, double clip);

/// Quantizes in-phase and quadrature parts independently with a per-antenna
/// clip amplitude (one entry per column).
TimeFrame quantize_frame(const TimeFrame& frame, const AdcConfig& cfg,
                         const std::vector<double>& clip_per_antenna);

/// Per-antenna automatic clip levels: multiplier x RMS of each column.
std::vector<double> auto_clip_levels(const std::vector<TimeFrame>& frames,
                                     const AdcConfig& cfg);

/// Draws an i.i.d. Rayleigh tap-delay-line realization with exponential
/// power-delay profile, unit total power per tx-rx pair. The identity kind
/// yields a single delta tap with identity antenna coupling.
ChannelRealization generate_channel(const ChannelProfile& profile, int n_r, int n_t,
                                    std::uint64_t seed);

/// Linear FIR convolution per rx antenna, truncated to the frame length.
TimeFrame apply_channel(const TimeFrame& frame, const ChannelRealization& ch);

/// Adds circularly symmetric complex Gaussian noise at the variance implied
/// by the reference signal power and the configured SNR.
TimeFrame awgn(const TimeFrame& frame, double snr_db, double reference_power, Rng& rng);

}  // namespace rcsd
