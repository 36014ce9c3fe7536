// SPDX-License-Identifier: Apache-2.0
//
// rc-symdet: reservoir-computing symbol detectors.
//
// Four detector families share one reservoir core:
//  - time RC: delay-searched linear readout trained on time-domain targets;
//  - time-frequency RC: time readout plus a fixed FFT and a trained
//    unit-modulus per-subcarrier phase layer, fit by alternating least
//    squares;
//  - deep variants of both, where layer l consumes the trained output of
//    layer l-1 and every layer keeps the original targets.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcsd/numerics.hpp"
#include "rcsd/ofdm.hpp"
#include "rcsd/reservoir.hpp"

namespace rcsd {

struct TrainingBatch {
    TimeFrame rx_time;      // received, (N_cp+N_sc) x N_r
    TimeFrame tx_time;      // transmitted (pre-distortion), (N_cp+N_sc) x N_t
    FrequencyGrid tx_freq;  // transmitted modulation symbols, N_sc x N_t
};
using TrainingSet = std::vector<TrainingBatch>;

struct TimeReadout {
    ComplexMatrix w_tout;  // n_neurons x N_t
    int p_star = 0;        // delay chosen by grid search
};

struct TfReadout {
    ComplexMatrix w_tout;  // n_neurons x N_t
    ComplexMatrix w_fout;  // N_sc x N_t, every entry unit modulus
};

struct TrainDiagnostics {
    /// Objective values in evaluation order. Time RC: one entry per delay
    /// grid point. TF RC: one entry per ALS half-update. Deep models
    /// concatenate their layers' traces.
    std::vector<double> objective_trace;
    std::vector<std::size_t> layer_starts;        // trace offset of each layer
    std::vector<double> layer_final_objectives;   // chosen/last objective per layer
    std::vector<double> normal_eq_residuals;      // one per least-squares solve
    bool rank_warning = false;
    double final_objective = 0.0;
};

struct AlsOptions {
    int max_iters = 5;
    double tol = 1e-8;  // stop when the relative objective decrease falls below
};

struct TimeRcModel {
    ReservoirSpec spec;
    std::uint64_t seed = 0;
    ReservoirWeights weights;
    TimeReadout readout;
};

struct TfRcModel {
    ReservoirSpec spec;
    std::uint64_t seed = 0;
    ReservoirWeights weights;
    TfReadout readout;
};

struct RcnetModel {
    enum class Kind { DeepTime, DeepTf };
    Kind kind = Kind::DeepTime;
    std::vector<TimeRcModel> time_layers;
    std::vector<TfRcModel> tf_layers;
    int depth() const {
        return static_cast<int>(kind == Kind::DeepTime ? time_layers.size() : tf_layers.size());
    }
};

struct Detection {
    FrequencyGrid grid;  // pre-decision symbol estimates, N_sc x N_t
    BitVector bits;      // hard decisions, subcarrier-major
};

/// Seed of layer l's reservoir under master seed `seed`. Shallow trainers
/// use layer 0 so a depth-1 deep model reproduces them bit for bit.
std::uint64_t layer_seed(std::uint64_t seed, int layer);

/// Delay grid 0..n_points-1 (the fine search used by shallow time RC).
std::vector<int> make_dense_delay_grid(int n_points);
/// n_points delays spread uniformly over [0, p_max], duplicates removed.
std::vector<int> make_uniform_delay_grid(int n_points, int p_max);

// -- shallow trainers ------------------------------------------------------

struct TimeRcTraining {
    TimeRcModel model;
    TrainDiagnostics diagnostics;
};
TimeRcTraining train_time_rc(const TrainingSet& train, const ReservoirSpec& spec,
                             const std::vector<int>& delay_grid, std::uint64_t seed);

struct TfRcTraining {
    TfRcModel model;
    TrainDiagnostics diagnostics;
};
TfRcTraining train_tf_rc(const TrainingSet& train, const ReservoirSpec& spec,
                         const SubframeConfig& cfg, const AlsOptions& als, std::uint64_t seed);

// -- deep trainers ---------------------------------------------------------

struct RcnetTraining {
    RcnetModel model;
    TrainDiagnostics diagnostics;
};
/// layer_specs: one spec per layer, or a single spec broadcast to all layers.
RcnetTraining train_rcnet_deep_time(const TrainingSet& train,
                                    const std::vector<ReservoirSpec>& layer_specs, int depth,
                                    const std::vector<int>& delay_grid, const SubframeConfig& cfg,
                                    std::uint64_t seed);
RcnetTraining train_rcnet_deep_tf(const TrainingSet& train,
                                  const std::vector<ReservoirSpec>& layer_specs, int depth,
                                  const AlsOptions& als, const SubframeConfig& cfg,
                                  std::uint64_t seed);

// -- detection -------------------------------------------------------------

Detection detect_time_rc(const TimeRcModel& model, const TimeFrame& frame,
                         const SubframeConfig& cfg, const ModulationScheme& scheme);
Detection detect_tf_rc(const TfRcModel& model, const TimeFrame& frame, const SubframeConfig& cfg,
                       const ModulationScheme& scheme);
Detection rcnet_detect(const RcnetModel& model, const TimeFrame& frame, const SubframeConfig& cfg,
                       const ModulationScheme& scheme);

// -- layer forwards (shared by training and inference) ----------------------

/// Time-layer estimate of the transmitted frame: pads the input by p_star
/// zero rows, runs the reservoir, applies the readout and advances the
/// output by p_star samples.
ComplexMatrix time_layer_forward(const TimeRcModel& layer, const ComplexMatrix& input);

/// TF-layer frequency output: reservoir, time readout on the CP-stripped
/// states, FFT, then the per-subcarrier phase layer.
FrequencyGrid tf_layer_freq_output(const TfRcModel& layer, const ComplexMatrix& input,
                                   const SubframeConfig& cfg);

// -- ALS building blocks ----------------------------------------------------

/// Optimal unit-modulus weights for one subcarrier. Rows of zbar_n / z_n are
/// the per-batch model outputs / targets at that subcarrier. Entries with a
/// vanishing inner product get weight 1.
ComplexVector tf_phase_update(const ComplexMatrix& zbar_n, const ComplexMatrix& z_n);

/// Least-squares time readout against phase-compensated frequency targets:
/// W = pinv(S) * vstack_q(ifft(target_q)).
ComplexMatrix tf_time_update(const ComplexMatrix& stacked_states,
                             const std::vector<FrequencyGrid>& compensated_targets,
                             double rel_tol = 1e-10);

// -- model persistence -------------------------------------------------------

/// Serializes a trained model (readouts, specs, seeds) as CBOR; reservoir
/// weights are regenerated from their seeds on load.
std::vector<std::uint8_t> save_rcnet_model(const RcnetModel& model);
RcnetModel load_rcnet_model(const std::vector<std::uint8_t>& blob);

}  // namespace rcsd
