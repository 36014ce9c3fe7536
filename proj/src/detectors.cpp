// SPDX-License-Identifier: Apache-2.0

#include "rcsd/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "json.hpp"

namespace rcsd {

namespace {

void validate_training_set(const TrainingSet& train) {
    if (train.empty()) throw std::invalid_argument("training set must hold at least one batch");
    const auto& first = train.front();
    for (const auto& b : train) {
        if (b.rx_time.rows() != first.rx_time.rows() || b.rx_time.cols() != first.rx_time.cols() ||
            b.tx_time.rows() != first.tx_time.rows() || b.tx_time.cols() != first.tx_time.cols() ||
            b.tx_freq.rows() != first.tx_freq.rows() || b.tx_freq.cols() != first.tx_freq.cols())
            throw std::invalid_argument("training set batches have inconsistent dimensions");
        if (b.rx_time.rows() != b.tx_time.rows())
            throw std::invalid_argument("received/transmitted frame lengths differ");
    }
}

ComplexMatrix pad_tail(const ComplexMatrix& m, int extra_rows) {
    if (extra_rows == 0) return m;
    ComplexMatrix out = ComplexMatrix::Zero(m.rows() + extra_rows, m.cols());
    out.topRows(m.rows()) = m;
    return out;
}

struct TimeCore {
    TimeReadout readout;
    std::vector<double> objectives;
    std::vector<double> neq_residuals;
    bool rank_warning = false;
    double final_objective = 0.0;
};

// Algorithm: for each delay p, pair the reservoir states of the tail-padded
// input with the head-padded target and solve the readout in closed form;
// keep the delay with the smallest objective. States are computed once with
// maximal padding since the recursion only looks backwards.
TimeCore train_time_core(const ReservoirWeights& weights, const ReservoirSpec& spec,
                         const std::vector<ComplexMatrix>& inputs,
                         const std::vector<ComplexMatrix>& targets,
                         const std::vector<int>& delay_grid) {
    if (delay_grid.empty()) throw std::invalid_argument("delay grid must not be empty");
    for (int p : delay_grid)
        if (p < 0) throw std::invalid_argument("delay grid entries must be non-negative");
    const int p_max = *std::max_element(delay_grid.begin(), delay_grid.end());
    const int q_count = static_cast<int>(inputs.size());
    const int t_len = static_cast<int>(inputs.front().rows());
    const int n_out = static_cast<int>(targets.front().cols());
    if (spec.washout >= t_len)
        throw std::invalid_argument("washout exceeds the frame length");

    std::vector<ComplexMatrix> trajs(inputs.size());
    for (int q = 0; q < q_count; ++q)
        trajs[static_cast<std::size_t>(q)] =
            run_reservoir(weights, pad_tail(inputs[static_cast<std::size_t>(q)], p_max));

    TimeCore core;
    double best = std::numeric_limits<double>::infinity();
    for (int p : delay_grid) {
        const int rows = t_len + p - spec.washout;
        ComplexMatrix s(q_count * rows, weights.n_neurons());
        ComplexMatrix tgt = ComplexMatrix::Zero(q_count * rows, n_out);
        for (int q = 0; q < q_count; ++q) {
            s.middleRows(q * rows, rows) =
                trajs[static_cast<std::size_t>(q)].middleRows(spec.washout, rows);
            // Target rows r < p are the zero head of the delayed pair.
            const int copy_from = std::max(spec.washout, p);
            const int copy_rows = t_len + p - copy_from;
            tgt.middleRows(q * rows + (copy_from - spec.washout), copy_rows) =
                targets[static_cast<std::size_t>(q)].middleRows(copy_from - p, copy_rows);
        }
        ComplexMatrix w;
        if (spec.ridge > 0.0) {
            w = ridge_solve(s, tgt, spec.ridge);
        } else {
            bool deficient = false;
            w = pinv_solve(s, tgt, 1e-10, &deficient);
            core.rank_warning = core.rank_warning || deficient;
        }
        const double obj = (s * w - tgt).squaredNorm();
        core.objectives.push_back(obj);
        core.neq_residuals.push_back(normal_equation_residual(s, w, tgt));
        if (obj < best) {
            best = obj;
            core.readout.w_tout = std::move(w);
            core.readout.p_star = p;
        }
    }
    core.final_objective = best;
    return core;
}

struct TfCore {
    TfReadout readout;
    std::vector<double> objectives;
    std::vector<double> neq_residuals;
    bool rank_warning = false;
    double final_objective = 0.0;
};

ComplexMatrix stack_ifft_targets(const std::vector<FrequencyGrid>& targets) {
    const Eigen::Index n_sc = targets.front().rows();
    const Eigen::Index n_out = targets.front().cols();
    ComplexMatrix stacked(static_cast<Eigen::Index>(targets.size()) * n_sc, n_out);
    for (std::size_t q = 0; q < targets.size(); ++q)
        stacked.middleRows(static_cast<Eigen::Index>(q) * n_sc, n_sc) = ifft_cols(targets[q]);
    return stacked;
}

TfCore train_tf_core(const ReservoirWeights& weights, const ReservoirSpec& spec,
                     const std::vector<ComplexMatrix>& inputs,
                     const std::vector<FrequencyGrid>& freq_targets, const SubframeConfig& cfg,
                     const AlsOptions& als) {
    if (als.max_iters < 1) throw std::invalid_argument("ALS requires at least one iteration");
    const int q_count = static_cast<int>(inputs.size());
    if (static_cast<int>(inputs.front().rows()) != cfg.frame_len())
        throw std::invalid_argument("TF training frames must span one OFDM symbol");
    if (freq_targets.front().rows() != cfg.n_sc)
        throw std::invalid_argument("TF training targets must have one row per subcarrier");
    const int n_sc = cfg.n_sc;
    const int n_out = static_cast<int>(freq_targets.front().cols());

    // CP-stripped state stack: rows N_cp .. N_cp+N_sc-1 of each trajectory.
    std::vector<ComplexMatrix> stripped(inputs.size());
    ComplexMatrix s(q_count * n_sc, weights.n_neurons());
    for (int q = 0; q < q_count; ++q) {
        const ComplexMatrix traj =
            run_reservoir(weights, inputs[static_cast<std::size_t>(q)]);
        stripped[static_cast<std::size_t>(q)] = traj.middleRows(cfg.n_cp, n_sc);
        s.middleRows(q * n_sc, n_sc) = stripped[static_cast<std::size_t>(q)];
    }

    const bool use_ridge = spec.ridge > 0.0;
    std::unique_ptr<PinvOperator> pinv;
    if (!use_ridge) pinv = std::make_unique<PinvOperator>(s);

    TfCore core;
    core.rank_warning = pinv && pinv->rank_deficient();
    ComplexMatrix w_fout = ComplexMatrix::Ones(n_sc, n_out);
    ComplexMatrix w_tout;
    std::vector<ComplexMatrix> y_freq(inputs.size());  // FFT of time-layer output, pre phase

    const auto refresh_y = [&] {
        for (int q = 0; q < q_count; ++q)
            y_freq[static_cast<std::size_t>(q)] =
                fft_cols(stripped[static_cast<std::size_t>(q)] * w_tout);
    };
    const auto objective = [&] {
        double obj = 0.0;
        for (int q = 0; q < q_count; ++q)
            obj += (y_freq[static_cast<std::size_t>(q)].cwiseProduct(w_fout) -
                    freq_targets[static_cast<std::size_t>(q)])
                       .squaredNorm();
        return obj;
    };

    double prev_full = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < als.max_iters; ++iter) {
        // Time half-step: fit the readout against phase-compensated targets.
        std::vector<FrequencyGrid> compensated(freq_targets.size());
        for (int q = 0; q < q_count; ++q)
            compensated[static_cast<std::size_t>(q)] =
                freq_targets[static_cast<std::size_t>(q)].cwiseProduct(w_fout.conjugate());
        const ComplexMatrix time_targets = stack_ifft_targets(compensated);
        w_tout = use_ridge ? ridge_solve(s, time_targets, spec.ridge) : pinv->solve(time_targets);
        core.neq_residuals.push_back(normal_equation_residual(s, w_tout, time_targets));
        refresh_y();
        core.objectives.push_back(objective());

        // Phase half-step: per-entry unit-modulus alignment.
        for (int n = 0; n < n_sc; ++n) {
            for (int j = 0; j < n_out; ++j) {
                cx inner(0.0, 0.0);
                for (int q = 0; q < q_count; ++q)
                    inner += std::conj(freq_targets[static_cast<std::size_t>(q)](n, j)) *
                             y_freq[static_cast<std::size_t>(q)](n, j);
                w_fout(n, j) = inner == cx(0.0, 0.0) ? cx(1.0, 0.0) : cx(std::conj(inner) / std::abs(inner));
            }
        }
        const double obj = objective();
        core.objectives.push_back(obj);
        if (!std::isfinite(obj))
            throw std::runtime_error("TF training objective became non-finite at ALS iteration " +
                                     std::to_string(iter));
        const bool converged =
            iter > 0 && prev_full > 0.0 && (prev_full - obj) / prev_full < als.tol;
        prev_full = obj;
        if (converged) break;
    }
    core.readout.w_tout = std::move(w_tout);
    core.readout.w_fout = std::move(w_fout);
    core.final_objective = core.objectives.back();
    return core;
}

std::vector<ComplexMatrix> rx_inputs(const TrainingSet& train) {
    std::vector<ComplexMatrix> inputs;
    inputs.reserve(train.size());
    for (const auto& b : train) inputs.push_back(b.rx_time);
    return inputs;
}

const ReservoirSpec& spec_for_layer(const std::vector<ReservoirSpec>& specs, int layer,
                                    int depth) {
    if (specs.empty()) throw std::invalid_argument("at least one reservoir spec required");
    if (specs.size() != 1 && static_cast<int>(specs.size()) != depth)
        throw std::invalid_argument("layer specs must be a single spec or one per layer");
    return specs.size() == 1 ? specs.front() : specs[static_cast<std::size_t>(layer)];
}

void append_layer_diag(TrainDiagnostics& diag, const std::vector<double>& objectives,
                       const std::vector<double>& neq, bool rank, double final_obj) {
    diag.layer_starts.push_back(diag.objective_trace.size());
    diag.objective_trace.insert(diag.objective_trace.end(), objectives.begin(), objectives.end());
    diag.normal_eq_residuals.insert(diag.normal_eq_residuals.end(), neq.begin(), neq.end());
    diag.layer_final_objectives.push_back(final_obj);
    diag.rank_warning = diag.rank_warning || rank;
    diag.final_objective = final_obj;
}

}  // namespace

std::uint64_t layer_seed(std::uint64_t seed, int layer) {
    return derive_seed(seed, "reservoir-layer", static_cast<std::uint64_t>(layer));
}

std::vector<int> make_dense_delay_grid(int n_points) {
    if (n_points < 1) throw std::invalid_argument("delay grid needs at least one point");
    std::vector<int> grid(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) grid[static_cast<std::size_t>(i)] = i;
    return grid;
}

std::vector<int> make_uniform_delay_grid(int n_points, int p_max) {
    if (n_points < 1 || p_max < 0) throw std::invalid_argument("invalid delay grid request");
    std::vector<int> grid;
    for (int i = 0; i < n_points; ++i) {
        const int p = n_points == 1
                          ? 0
                          : static_cast<int>(std::llround(static_cast<double>(i) * p_max /
                                                          (n_points - 1)));
        if (grid.empty() || grid.back() != p) grid.push_back(p);
    }
    return grid;
}

TimeRcTraining train_time_rc(const TrainingSet& train, const ReservoirSpec& spec,
                             const std::vector<int>& delay_grid, std::uint64_t seed) {
    validate_training_set(train);
    const std::uint64_t ls = layer_seed(seed, 0);
    const int width = static_cast<int>(train.front().rx_time.cols());
    TimeRcTraining out;
    out.model.spec = spec;
    out.model.seed = ls;
    out.model.weights = init_reservoir(spec, width, ls);

    std::vector<ComplexMatrix> inputs = rx_inputs(train);
    std::vector<ComplexMatrix> targets;
    targets.reserve(train.size());
    for (const auto& b : train) targets.push_back(b.tx_time);

    TimeCore core = train_time_core(out.model.weights, spec, inputs, targets, delay_grid);
    out.model.readout = core.readout;
    append_layer_diag(out.diagnostics, core.objectives, core.neq_residuals, core.rank_warning,
                      core.final_objective);
    return out;
}

TfRcTraining train_tf_rc(const TrainingSet& train, const ReservoirSpec& spec,
                         const SubframeConfig& cfg, const AlsOptions& als, std::uint64_t seed) {
    validate_training_set(train);
    cfg.validate();
    const std::uint64_t ls = layer_seed(seed, 0);
    const int width = static_cast<int>(train.front().rx_time.cols());
    TfRcTraining out;
    out.model.spec = spec;
    out.model.seed = ls;
    out.model.weights = init_reservoir(spec, width, ls);

    std::vector<ComplexMatrix> inputs = rx_inputs(train);
    std::vector<FrequencyGrid> targets;
    targets.reserve(train.size());
    for (const auto& b : train) targets.push_back(b.tx_freq);

    TfCore core = train_tf_core(out.model.weights, spec, inputs, targets, cfg, als);
    out.model.readout = core.readout;
    append_layer_diag(out.diagnostics, core.objectives, core.neq_residuals, core.rank_warning,
                      core.final_objective);
    return out;
}

RcnetTraining train_rcnet_deep_time(const TrainingSet& train,
                                    const std::vector<ReservoirSpec>& layer_specs, int depth,
                                    const std::vector<int>& delay_grid, const SubframeConfig& cfg,
                                    std::uint64_t seed) {
    validate_training_set(train);
    cfg.validate();
    if (depth < 1) throw std::invalid_argument("RCNet depth must be >= 1");

    RcnetTraining out;
    out.model.kind = RcnetModel::Kind::DeepTime;
    std::vector<ComplexMatrix> inputs = rx_inputs(train);
    std::vector<ComplexMatrix> targets;
    targets.reserve(train.size());
    for (const auto& b : train) targets.push_back(b.tx_time);

    for (int l = 0; l < depth; ++l) {
        const ReservoirSpec& spec = spec_for_layer(layer_specs, l, depth);
        const std::uint64_t ls = layer_seed(seed, l);
        TimeRcModel layer;
        layer.spec = spec;
        layer.seed = ls;
        layer.weights = init_reservoir(spec, static_cast<int>(inputs.front().cols()), ls);
        TimeCore core = train_time_core(layer.weights, spec, inputs, targets, delay_grid);
        layer.readout = core.readout;
        append_layer_diag(out.diagnostics, core.objectives, core.neq_residuals, core.rank_warning,
                          core.final_objective);
        out.model.time_layers.push_back(std::move(layer));
        if (l + 1 < depth)
            for (auto& input : inputs)
                input = time_layer_forward(out.model.time_layers.back(), input);
    }
    return out;
}

RcnetTraining train_rcnet_deep_tf(const TrainingSet& train,
                                  const std::vector<ReservoirSpec>& layer_specs, int depth,
                                  const AlsOptions& als, const SubframeConfig& cfg,
                                  std::uint64_t seed) {
    validate_training_set(train);
    cfg.validate();
    if (depth < 1) throw std::invalid_argument("RCNet depth must be >= 1");

    RcnetTraining out;
    out.model.kind = RcnetModel::Kind::DeepTf;
    std::vector<ComplexMatrix> inputs = rx_inputs(train);
    std::vector<FrequencyGrid> targets;
    targets.reserve(train.size());
    for (const auto& b : train) targets.push_back(b.tx_freq);

    for (int l = 0; l < depth; ++l) {
        const ReservoirSpec& spec = spec_for_layer(layer_specs, l, depth);
        const std::uint64_t ls = layer_seed(seed, l);
        TfRcModel layer;
        layer.spec = spec;
        layer.seed = ls;
        layer.weights = init_reservoir(spec, static_cast<int>(inputs.front().cols()), ls);
        TfCore core = train_tf_core(layer.weights, spec, inputs, targets, cfg, als);
        layer.readout = core.readout;
        append_layer_diag(out.diagnostics, core.objectives, core.neq_residuals, core.rank_warning,
                          core.final_objective);
        out.model.tf_layers.push_back(std::move(layer));
        if (l + 1 < depth) {
            // Rebuild a full-length time frame for the next reservoir: IFFT of
            // the frequency output plus cyclic-prefix re-insertion.
            for (auto& input : inputs) {
                const FrequencyGrid z =
                    tf_layer_freq_output(out.model.tf_layers.back(), input, cfg);
                input = ofdm_modulate(z, cfg);
            }
        }
    }
    return out;
}

ComplexMatrix time_layer_forward(const TimeRcModel& layer, const ComplexMatrix& input) {
    if (layer.readout.w_tout.rows() != layer.weights.n_neurons() ||
        layer.readout.w_tout.size() == 0)
        throw std::invalid_argument("time_layer_forward: model is untrained");
    const int p = layer.readout.p_star;
    const ComplexMatrix traj = run_reservoir(layer.weights, pad_tail(input, p));
    const ComplexMatrix y = traj * layer.readout.w_tout;
    return y.bottomRows(input.rows());
}

FrequencyGrid tf_layer_freq_output(const TfRcModel& layer, const ComplexMatrix& input,
                                   const SubframeConfig& cfg) {
    if (layer.readout.w_tout.rows() != layer.weights.n_neurons() ||
        layer.readout.w_tout.size() == 0 || layer.readout.w_fout.rows() != cfg.n_sc)
        throw std::invalid_argument("tf_layer_freq_output: model is untrained or mismatched");
    if (input.rows() != cfg.frame_len())
        throw std::invalid_argument("tf_layer_freq_output: frame length mismatch");
    const ComplexMatrix traj = run_reservoir(layer.weights, input);
    const ComplexMatrix y = traj.middleRows(cfg.n_cp, cfg.n_sc) * layer.readout.w_tout;
    return fft_cols(y).cwiseProduct(layer.readout.w_fout);
}

Detection detect_time_rc(const TimeRcModel& model, const TimeFrame& frame,
                         const SubframeConfig& cfg, const ModulationScheme& scheme) {
    if (frame.rows() != cfg.frame_len())
        throw std::invalid_argument("detect_time_rc: frame length mismatch");
    const ComplexMatrix estimate = time_layer_forward(model, frame);
    Detection det;
    det.grid = ofdm_demodulate(estimate, cfg);
    det.bits = bits_from_grid(det.grid, scheme);
    return det;
}

Detection detect_tf_rc(const TfRcModel& model, const TimeFrame& frame, const SubframeConfig& cfg,
                       const ModulationScheme& scheme) {
    Detection det;
    det.grid = tf_layer_freq_output(model, frame, cfg);
    det.bits = bits_from_grid(det.grid, scheme);
    return det;
}

Detection rcnet_detect(const RcnetModel& model, const TimeFrame& frame, const SubframeConfig& cfg,
                       const ModulationScheme& scheme) {
    if (model.depth() < 1) throw std::invalid_argument("rcnet_detect: model is untrained");
    Detection det;
    if (model.kind == RcnetModel::Kind::DeepTime) {
        ComplexMatrix signal = frame;
        for (const auto& layer : model.time_layers) signal = time_layer_forward(layer, signal);
        det.grid = ofdm_demodulate(signal, cfg);
    } else {
        ComplexMatrix signal = frame;
        const int depth = model.depth();
        for (int l = 0; l < depth; ++l) {
            const FrequencyGrid z =
                tf_layer_freq_output(model.tf_layers[static_cast<std::size_t>(l)], signal, cfg);
            if (l + 1 == depth)
                det.grid = z;
            else
                signal = ofdm_modulate(z, cfg);
        }
    }
    det.bits = bits_from_grid(det.grid, scheme);
    return det;
}

ComplexVector tf_phase_update(const ComplexMatrix& zbar_n, const ComplexMatrix& z_n) {
    if (zbar_n.rows() != z_n.rows() || zbar_n.cols() != z_n.cols())
        throw std::invalid_argument("tf_phase_update: shapes must match");
    ComplexVector w(z_n.cols());
    for (Eigen::Index j = 0; j < z_n.cols(); ++j) {
        const cx inner = z_n.col(j).dot(zbar_n.col(j));  // z^H zbar
        w(j) = inner == cx(0.0, 0.0) ? cx(1.0, 0.0) : cx(std::conj(inner) / std::abs(inner));
    }
    return w;
}

ComplexMatrix tf_time_update(const ComplexMatrix& stacked_states,
                             const std::vector<FrequencyGrid>& compensated_targets,
                             double rel_tol) {
    if (compensated_targets.empty())
        throw std::invalid_argument("tf_time_update: no targets");
    const Eigen::Index n_sc = compensated_targets.front().rows();
    if (stacked_states.rows() != static_cast<Eigen::Index>(compensated_targets.size()) * n_sc)
        throw std::invalid_argument("tf_time_update: state stack must hold Q*N_sc rows");
    return pinv_solve(stacked_states, stack_ifft_targets(compensated_targets), rel_tol);
}

// -- persistence -------------------------------------------------------------

namespace {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
    json data = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            data.push_back(m(r, c).real());
            data.push_back(m(r, c).imag());
        }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
    const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
    const auto& data = j.at("data");
    if (static_cast<Eigen::Index>(data.size()) != 2 * rows * cols)
        throw std::runtime_error("model artifact: matrix payload size mismatch");
    ComplexMatrix m(rows, cols);
    std::size_t k = 0;
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) {
            const double re = data[k++].get<double>();
            const double im = data[k++].get<double>();
            m(r, c) = cx(re, im);
        }
    return m;
}

json spec_to_json(const ReservoirSpec& s) {
    return json{{"n_neurons", s.n_neurons},
                {"window_len", s.window_len},
                {"spectral_radius", s.spectral_radius_target},
                {"sparsity", s.w_s_sparsity},
                {"input_scale", s.input_scale},
                {"state_noise_std", s.state_noise_std},
                {"washout", s.washout},
                {"ridge", s.ridge}};
}

ReservoirSpec spec_from_json(const json& j) {
    ReservoirSpec s;
    s.n_neurons = j.at("n_neurons").get<int>();
    s.window_len = j.at("window_len").get<int>();
    s.spectral_radius_target = j.at("spectral_radius").get<double>();
    s.w_s_sparsity = j.at("sparsity").get<double>();
    s.input_scale = j.at("input_scale").get<double>();
    s.state_noise_std = j.at("state_noise_std").get<double>();
    s.washout = j.at("washout").get<int>();
    s.ridge = j.at("ridge").get<double>();
    return s;
}

}  // namespace

std::vector<std::uint8_t> save_rcnet_model(const RcnetModel& model) {
    json doc;
    doc["format"] = "rcsd-model";
    doc["version"] = 1;
    doc["kind"] = model.kind == RcnetModel::Kind::DeepTime ? "rcnet-time" : "rcnet-tf";
    json layers = json::array();
    if (model.kind == RcnetModel::Kind::DeepTime) {
        for (const auto& layer : model.time_layers)
            layers.push_back(json{{"spec", spec_to_json(layer.spec)},
                                  {"seed", layer.seed},
                                  {"input_width", layer.weights.input_width},
                                  {"w_tout", matrix_to_json(layer.readout.w_tout)},
                                  {"p_star", layer.readout.p_star}});
    } else {
        for (const auto& layer : model.tf_layers)
            layers.push_back(json{{"spec", spec_to_json(layer.spec)},
                                  {"seed", layer.seed},
                                  {"input_width", layer.weights.input_width},
                                  {"w_tout", matrix_to_json(layer.readout.w_tout)},
                                  {"w_fout", matrix_to_json(layer.readout.w_fout)}});
    }
    doc["layers"] = std::move(layers);
    return json::to_cbor(doc);
}

RcnetModel load_rcnet_model(const std::vector<std::uint8_t>& blob) {
    const json doc = json::from_cbor(blob);
    if (doc.at("format").get<std::string>() != "rcsd-model")
        throw std::runtime_error("not an rcsd model artifact");
    RcnetModel model;
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "rcnet-time")
        model.kind = RcnetModel::Kind::DeepTime;
    else if (kind == "rcnet-tf")
        model.kind = RcnetModel::Kind::DeepTf;
    else
        throw std::runtime_error("unknown model kind: " + kind);
    for (const auto& lj : doc.at("layers")) {
        const ReservoirSpec spec = spec_from_json(lj.at("spec"));
        const std::uint64_t seed = lj.at("seed").get<std::uint64_t>();
        const int width = lj.at("input_width").get<int>();
        if (model.kind == RcnetModel::Kind::DeepTime) {
            TimeRcModel layer;
            layer.spec = spec;
            layer.seed = seed;
            layer.weights = init_reservoir(spec, width, seed);
            layer.readout.w_tout = matrix_from_json(lj.at("w_tout"));
            layer.readout.p_star = lj.at("p_star").get<int>();
            model.time_layers.push_back(std::move(layer));
        } else {
            TfRcModel layer;
            layer.spec = spec;
            layer.seed = seed;
            layer.weights = init_reservoir(spec, width, seed);
            layer.readout.w_tout = matrix_from_json(lj.at("w_tout"));
            layer.readout.w_fout = matrix_from_json(lj.at("w_fout"));
            model.tf_layers.push_back(std::move(layer));
        }
    }
    return model;
}

}  // namespace rcsd
