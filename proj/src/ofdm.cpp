// SPDX-License-Identifier: Apache-2.0

#include "rcsd/ofdm.hpp"

#include <cmath>
#include <stdexcept>

namespace rcsd {

namespace {

// Per-axis 2-bit Gray levels: 00 -> +3, 01 -> +1, 11 -> -1, 10 -> -3.
constexpr double kQam16Axis[4] = {3.0, 1.0, -1.0, -3.0};

int axis_level_index(int b_hi, int b_lo) {
    // Gray order 00, 01, 11, 10 maps onto kQam16Axis positions 0..3.
    static constexpr int lut[4] = {0, 1, 3, 2};
    return lut[(b_hi << 1) | b_lo];
}

}  // namespace

ModulationScheme::ModulationScheme(Modulation order) : order_(order) {
    if (order == Modulation::Qpsk) {
        bits_per_symbol_ = 2;
        points_.resize(4);
        const double s = 1.0 / std::sqrt(2.0);
        for (int b = 0; b < 4; ++b) {
            const int b0 = (b >> 1) & 1, b1 = b & 1;
            points_[b] = cx((1 - 2 * b0) * s, (1 - 2 * b1) * s);
        }
    } else {
        bits_per_symbol_ = 4;
        points_.resize(16);
        const double s = 1.0 / std::sqrt(10.0);
        for (int b = 0; b < 16; ++b) {
            const int b0 = (b >> 3) & 1, b1 = (b >> 2) & 1, b2 = (b >> 1) & 1, b3 = b & 1;
            const double re = kQam16Axis[axis_level_index(b0, b1)] * s;
            const double im = kQam16Axis[axis_level_index(b2, b3)] * s;
            points_[b] = cx(re, im);
        }
    }
}

int ModulationScheme::nearest(cx symbol) const {
    int best = 0;
    double best_d = std::norm(symbol - points_[0]);
    for (int i = 1; i < size(); ++i) {
        const double d = std::norm(symbol - points_[static_cast<std::size_t>(i)]);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

void SubframeConfig::validate() const {
    if (n_sc < 1 || n_cp < 0 || n_t < 1 || n_r < 1 || q < 1 || n_d < 1)
        throw std::invalid_argument("SubframeConfig: all dimensions must be positive");
    if (n_cp >= n_sc) throw std::invalid_argument("SubframeConfig: require n_cp < n_sc");
}

ComplexVector qam_modulate(const BitVector& bits, const ModulationScheme& scheme) {
    const int bps = scheme.bits_per_symbol();
    if (bits.size() % static_cast<std::size_t>(bps) != 0)
        throw std::invalid_argument("qam_modulate: bit count not divisible by bits per symbol");
    const std::size_t n = bits.size() / static_cast<std::size_t>(bps);
    ComplexVector out(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        int idx = 0;
        for (int b = 0; b < bps; ++b) idx = (idx << 1) | (bits[i * bps + b] ? 1 : 0);
        out(static_cast<Eigen::Index>(i)) = scheme.point(idx);
    }
    return out;
}

BitVector qam_demodulate(const ComplexVector& symbols, const ModulationScheme& scheme) {
    const int bps = scheme.bits_per_symbol();
    BitVector out(static_cast<std::size_t>(symbols.size()) * static_cast<std::size_t>(bps));
    for (Eigen::Index i = 0; i < symbols.size(); ++i) {
        const int idx = scheme.nearest(symbols(i));
        for (int b = 0; b < bps; ++b)
            out[static_cast<std::size_t>(i) * bps + b] =
                static_cast<std::uint8_t>((idx >> (bps - 1 - b)) & 1);
    }
    return out;
}

TimeFrame ofdm_modulate(const FrequencyGrid& grid, const SubframeConfig& cfg) {
    if (grid.rows() != cfg.n_sc || grid.cols() != cfg.n_t)
        throw std::invalid_argument("ofdm_modulate: grid dimensions do not match config");
    const ComplexMatrix body = ifft_cols(grid);  // N_sc x N_t
    TimeFrame frame(cfg.frame_len(), cfg.n_t);
    frame.topRows(cfg.n_cp) = body.bottomRows(cfg.n_cp);
    frame.bottomRows(cfg.n_sc) = body;
    return frame;
}

FrequencyGrid ofdm_demodulate(const TimeFrame& frame, const SubframeConfig& cfg) {
    if (frame.rows() != cfg.frame_len())
        throw std::invalid_argument("ofdm_demodulate: frame length does not match config");
    return fft_cols(frame.bottomRows(cfg.n_sc));
}

double papr_db(const TimeFrame& frame) {
    if (frame.size() == 0 || frame.isZero(0.0))
        throw std::domain_error("papr_db: undefined for an all-zero frame");
    const double peak = frame.cwiseAbs2().maxCoeff();
    const double mean = frame.cwiseAbs2().mean();
    return 10.0 * std::log10(peak / mean);
}

FrequencyGrid grid_from_bits(const BitVector& bits, const ModulationScheme& scheme,
                             const SubframeConfig& cfg) {
    const std::size_t expected = static_cast<std::size_t>(cfg.n_sc) * cfg.n_t *
                                 static_cast<std::size_t>(scheme.bits_per_symbol());
    if (bits.size() != expected)
        throw std::invalid_argument("grid_from_bits: bit count does not match grid size");
    const ComplexVector symbols = qam_modulate(bits, scheme);
    FrequencyGrid grid(cfg.n_sc, cfg.n_t);
    for (int n = 0; n < cfg.n_sc; ++n)
        for (int j = 0; j < cfg.n_t; ++j) grid(n, j) = symbols(n * cfg.n_t + j);
    return grid;
}

BitVector bits_from_grid(const FrequencyGrid& grid, const ModulationScheme& scheme) {
    ComplexVector symbols(grid.rows() * grid.cols());
    for (Eigen::Index n = 0; n < grid.rows(); ++n)
        for (Eigen::Index j = 0; j < grid.cols(); ++j) symbols(n * grid.cols() + j) = grid(n, j);
    return qam_demodulate(symbols, scheme);
}

}  // namespace rcsd
