// SPDX-License-Identifier: Apache-2.0

#include "rcsd/reservoir.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rcsd {

void ReservoirSpec::validate() const {
    if (n_neurons < 1) throw std::invalid_argument("ReservoirSpec: n_neurons must be >= 1");
    if (window_len < 1) throw std::invalid_argument("ReservoirSpec: window_len must be >= 1");
    if (spectral_radius_target <= 0.0 || spectral_radius_target >= 1.0)
        throw std::invalid_argument("ReservoirSpec: spectral radius target must be in (0,1)");
    if (w_s_sparsity <= 0.0 || w_s_sparsity > 1.0)
        throw std::invalid_argument("ReservoirSpec: sparsity must be in (0,1]");
    if (state_noise_std < 0.0 || ridge < 0.0 || washout < 0)
        throw std::invalid_argument("ReservoirSpec: negative regularizer");
}

ReservoirWeights init_reservoir(const ReservoirSpec& spec, int input_width, std::uint64_t seed) {
    spec.validate();
    if (input_width < 1) throw std::invalid_argument("init_reservoir: input_width must be >= 1");

    const int n = spec.n_neurons;
    const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    const std::size_t nnz =
        static_cast<std::size_t>(std::llround(spec.w_s_sparsity * static_cast<double>(total)));
    if (nnz == 0)
        throw std::invalid_argument("init_reservoir: sparsity too low for this reservoir size");

    Rng rng(seed);

    // Exact-count sparsity: partial Fisher-Yates over all entry positions.
    std::vector<std::uint32_t> positions(total);
    std::iota(positions.begin(), positions.end(), 0u);
    RealMatrix w_s = RealMatrix::Zero(n, n);
    for (std::size_t k = 0; k < nnz; ++k) {
        const std::size_t pick = k + static_cast<std::size_t>(rng.below(total - k));
        std::swap(positions[k], positions[pick]);
        const std::uint32_t pos = positions[k];
        w_s(static_cast<Eigen::Index>(pos / static_cast<std::size_t>(n)),
            static_cast<Eigen::Index>(pos % static_cast<std::size_t>(n))) = rng.uniform(-1.0, 1.0);
    }

    const double radius = spectral_radius(w_s);
    if (radius <= 0.0)
        throw std::invalid_argument("init_reservoir: drawn recurrent matrix is nilpotent; "
                                    "increase sparsity or reservoir size");
    w_s *= spec.spectral_radius_target / radius;

    ReservoirWeights weights;
    weights.w_s = std::move(w_s);
    weights.w_in = RealMatrix(spec.window_len * input_width, n);
    for (Eigen::Index i = 0; i < weights.w_in.rows(); ++i)
        for (Eigen::Index j = 0; j < weights.w_in.cols(); ++j)
            weights.w_in(i, j) = rng.uniform(-spec.input_scale, spec.input_scale);
    weights.w_fb = RealMatrix::Zero(input_width, n);
    weights.window_len = spec.window_len;
    weights.input_width = input_width;
    return weights;
}

ComplexMatrix build_windowed_input(const ComplexMatrix& input, int window_len) {
    if (window_len < 1) throw std::invalid_argument("build_windowed_input: window_len >= 1");
    const Eigen::Index t_len = input.rows();
    const Eigen::Index width = input.cols();
    ComplexMatrix windowed = ComplexMatrix::Zero(t_len, window_len * width);
    for (int lag = 0; lag < window_len; ++lag) {
        const Eigen::Index rows = t_len - lag;
        if (rows <= 0) break;
        windowed.block(lag, lag * width, rows, width) = input.topRows(rows);
    }
    return windowed;
}

namespace {

inline cx split_tanh(cx z) { return cx(std::tanh(z.real()), std::tanh(z.imag())); }

}  // namespace

ComplexMatrix run_reservoir(const ReservoirWeights& weights, const ComplexMatrix& input,
                            double state_noise_std, Rng* noise_rng,
                            const ComplexVector* initial_state) {
    const int n = weights.n_neurons();
    if (input.cols() != weights.input_width)
        throw std::invalid_argument("run_reservoir: input width does not match reservoir");
    if (state_noise_std > 0.0 && noise_rng == nullptr)
        throw std::invalid_argument("run_reservoir: state noise requires an rng");

    const ComplexMatrix windowed = build_windowed_input(input, weights.window_len);
    // Input projection is time-invariant; hoist it out of the recursion.
    const ComplexMatrix driven = windowed * weights.w_in.cast<cx>();

    ComplexMatrix states = ComplexMatrix::Zero(input.rows(), n);
    if (initial_state != nullptr) {
        if (initial_state->size() != n)
            throw std::invalid_argument("run_reservoir: initial state size mismatch");
        states.row(0) = initial_state->transpose();
    }
    const Eigen::MatrixXcd w_s = weights.w_s.cast<cx>();
    Eigen::RowVectorXcd pre(n);
    for (Eigen::Index t = 0; t + 1 < input.rows(); ++t) {
        pre = states.row(t) * w_s + driven.row(t);
        if (state_noise_std > 0.0)
            for (int i = 0; i < n; ++i)
                pre(i) += cx(state_noise_std * noise_rng->normal(),
                             state_noise_std * noise_rng->normal());
        for (int i = 0; i < n; ++i) states(t + 1, i) = split_tanh(pre(i));
    }
    return states;
}

}  // namespace rcsd
