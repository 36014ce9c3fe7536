// SPDX-License-Identifier: Apache-2.0

#include "rcsd/impairments.hpp"

#include <cmath>
#include <stdexcept>

namespace rcsd {

void PaConfig::validate() const {
    if (rho <= 0.0 || x_sat <= 0.0)
        throw std::invalid_argument("PaConfig: rho and x_sat must be positive");
}

void AdcConfig::validate() const {
    if (bits < 1) throw std::invalid_argument("AdcConfig: bits must be >= 1");
    if (a_max < 0.0) throw std::invalid_argument("AdcConfig: a_max must be >= 0");
    if (a_max == 0.0 && auto_rms_multiplier <= 0.0)
        throw std::invalid_argument("AdcConfig: auto clip multiplier must be positive");
}

cx rapp_pa(cx x, const PaConfig& cfg) {
    const double mag = std::abs(x);
    if (mag == 0.0) return cx(0.0, 0.0);
    const double denom = std::pow(1.0 + std::pow(mag / cfg.x_sat, 2.0 * cfg.rho),
                                  1.0 / (2.0 * cfg.rho));
    return x / denom;
}

double ibo_db(const TimeFrame& frame, double x_sat) {
    const double p_in = frame.cwiseAbs2().mean();
    if (p_in <= 0.0) throw std::domain_error("ibo_db: zero-power frame");
    return 10.0 * std::log10(x_sat * x_sat / p_in);
}

double pa_input_gain(const PaConfig& cfg, double mean_input_power) {
    if (mean_input_power <= 0.0) throw std::domain_error("pa_input_gain: zero input power");
    const double target_power =
        cfg.x_sat * cfg.x_sat * std::pow(10.0, -cfg.input_backoff_db / 10.0);
    return std::sqrt(target_power / mean_input_power);
}

TimeFrame apply_pa(const TimeFrame& frame, const PaConfig& cfg, double gain) {
    if (!cfg.enabled) return frame;
    TimeFrame out(frame.rows(), frame.cols());
    for (Eigen::Index j = 0; j < frame.cols(); ++j)
        for (Eigen::Index t = 0; t < frame.rows(); ++t)
            out(t, j) = rapp_pa(gain * frame(t, j), cfg);
    return out;
}

double quantize_adc(double x, double step, double clip) {
    if (std::abs(x) >= clip) return clip * (x < 0.0 ? -1.0 : 1.0);
    return step * std::ceil(x / step) - step / 2.0;
}

TimeFrame quantize_frame(const TimeFrame& frame, const AdcConfig& cfg,
                         const std::vector<double>& clip_per_antenna) {
    if (!cfg.enabled) return frame;
    if (clip_per_antenna.size() != static_cast<std::size_t>(frame.cols()))
        throw std::invalid_argument("quantize_frame: one clip level per antenna required");
    TimeFrame out(frame.rows(), frame.cols());
    for (Eigen::Index j = 0; j < frame.cols(); ++j) {
        const double clip = clip_per_antenna[static_cast<std::size_t>(j)];
        const double step = cfg.step(clip);
        for (Eigen::Index t = 0; t < frame.rows(); ++t)
            out(t, j) = cx(quantize_adc(frame(t, j).real(), step, clip),
                           quantize_adc(frame(t, j).imag(), step, clip));
    }
    return out;
}

std::vector<double> auto_clip_levels(const std::vector<TimeFrame>& frames, const AdcConfig& cfg) {
    if (frames.empty()) throw std::invalid_argument("auto_clip_levels: no frames");
    const Eigen::Index cols = frames.front().cols();
    std::vector<double> clip(static_cast<std::size_t>(cols), 0.0);
    for (Eigen::Index j = 0; j < cols; ++j) {
        double acc = 0.0;
        std::size_t count = 0;
        for (const auto& f : frames) {
            acc += f.col(j).cwiseAbs2().sum();
            count += static_cast<std::size_t>(f.rows());
        }
        clip[static_cast<std::size_t>(j)] =
            cfg.auto_rms_multiplier * std::sqrt(acc / static_cast<double>(count));
    }
    return clip;
}

ChannelRealization generate_channel(const ChannelProfile& profile, int n_r, int n_t,
                                    std::uint64_t seed) {
    if (profile.l_taps < 1) throw std::invalid_argument("generate_channel: l_taps must be >= 1");
    ChannelRealization ch;
    if (profile.kind == ChannelProfile::Kind::Identity) {
        if (n_r != n_t)
            throw std::invalid_argument("generate_channel: identity channel requires n_r == n_t");
        ch.taps.emplace_back(ComplexMatrix::Identity(n_r, n_t));
        return ch;
    }
    // Exponential power-delay profile, normalized to unit total power.
    std::vector<double> pdp(static_cast<std::size_t>(profile.l_taps));
    double total = 0.0;
    for (int l = 0; l < profile.l_taps; ++l) {
        pdp[static_cast<std::size_t>(l)] = std::pow(10.0, -profile.decay_db_per_tap * l / 10.0);
        total += pdp[static_cast<std::size_t>(l)];
    }
    Rng rng(seed);
    ch.taps.assign(static_cast<std::size_t>(profile.l_taps), ComplexMatrix(n_r, n_t));
    for (int l = 0; l < profile.l_taps; ++l) {
        const double var = pdp[static_cast<std::size_t>(l)] / total;
        for (int r = 0; r < n_r; ++r)
            for (int t = 0; t < n_t; ++t)
                ch.taps[static_cast<std::size_t>(l)](r, t) = rng.complex_normal(var);
    }
    return ch;
}

TimeFrame apply_channel(const TimeFrame& frame, const ChannelRealization& ch) {
    if (ch.taps.empty()) throw std::invalid_argument("apply_channel: empty channel");
    if (frame.cols() != ch.taps.front().cols())
        throw std::invalid_argument("apply_channel: frame antennas do not match channel inputs");
    const Eigen::Index n_r = ch.taps.front().rows();
    TimeFrame out = TimeFrame::Zero(frame.rows(), n_r);
    for (int l = 0; l < ch.l_taps(); ++l) {
        const auto& h = ch.taps[static_cast<std::size_t>(l)];
        for (Eigen::Index t = l; t < frame.rows(); ++t)
            out.row(t) += frame.row(t - l) * h.transpose();
    }
    return out;
}

TimeFrame awgn(const TimeFrame& frame, double snr_db, double reference_power, Rng& rng) {
    if (std::isinf(snr_db) && snr_db > 0.0) return frame;
    if (reference_power <= 0.0) throw std::domain_error("awgn: non-positive reference power");
    const double noise_var = reference_power * std::pow(10.0, -snr_db / 10.0);
    TimeFrame out(frame.rows(), frame.cols());
    for (Eigen::Index t = 0; t < frame.rows(); ++t)
        for (Eigen::Index j = 0; j < frame.cols(); ++j)
            out(t, j) = frame(t, j) + rng.complex_normal(noise_var);
    return out;
}

}  // namespace rcsd
