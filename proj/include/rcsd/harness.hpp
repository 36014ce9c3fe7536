// SPDX-License-Identifier: Apache-2.0
//
// rc-symdet: experiment orchestration — Monte-Carlo sweeps over SNR or IBO,
// per-trial training/detection, BER aggregation, and reproducible artifacts.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "rcsd/baselines.hpp"
#include "rcsd/detectors.hpp"
#include "rcsd/impairments.hpp"
#include "rcsd/ofdm.hpp"

namespace rcsd {

inline constexpr const char* kSoftwareVersion = "rc-symdet 0.1.0";

/// Detector identifiers accepted in configs and reports.
inline const std::vector<std::string> kAllDetectors = {"time-rc",    "tf-rc",  "rcnet-time",
                                                       "rcnet-tf",   "lmmse",  "sphere"};

struct SweepSpec {
    std::string variable = "snr_db";  // "snr_db" or "ibo_db"
    std::vector<double> values = {15.0};
};

struct RcConfig {
    ReservoirSpec spec;
    int layers = 3;               // RCNet depth
    int shallow_delay_points = 50;
    int deep_delay_points = 5;    // spread uniformly over [0, N_cp]
    AlsOptions als;
};

struct ExperimentConfig {
    SubframeConfig subframe;
    Modulation modulation = Modulation::Qam16;
    PaConfig pa;
    AdcConfig adc;
    ChannelProfile channel;
    double snr_db = 15.0;  // fixed received SNR when sweeping something else
    SweepSpec sweep;
    std::vector<std::string> detectors = kAllDetectors;
    RcConfig rc;
    int trials = 50;
    std::uint64_t master_seed = 1;

    void validate() const;
    bool detector_enabled(const std::string& id) const;
};

/// Desk-scale defaults: every structural ratio of the full-scale setup is
/// preserved while a complete sweep stays interactive.
ExperimentConfig desk_profile();
/// Full-scale parameters (1024 subcarriers, 4x4, 128 neurons). Opt-in.
ExperimentConfig paper_profile();

nlohmann::json config_to_json(const ExperimentConfig& cfg);
/// Applies the fields present in `patch` on top of `base`.
ExperimentConfig config_from_json(const nlohmann::json& patch, const ExperimentConfig& base);

struct BerCount {
    std::uint64_t bit_errors = 0;
    std::uint64_t total_bits = 0;
};

struct BerRecord {
    std::string detector;
    std::string sweep_variable;
    double sweep_value = 0.0;
    int trials = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t total_bits = 0;
    double ber = 0.0;
};

struct TrialResult {
    std::vector<std::pair<std::string, BerCount>> counts;  // config detector order
    std::map<std::string, TrainDiagnostics> diagnostics;   // RC detectors only
    std::vector<double> adc_clip;                          // per antenna; empty if ADC off
};

struct RunManifest {
    std::string software = kSoftwareVersion;
    nlohmann::json config_echo;
    std::uint64_t master_seed = 0;
    nlohmann::json trial_seeds;          // per-trial derived component seeds
    double eta = 0.0;                    // reference-signal overhead Q/(Q+N_d)
    double snr_offset_db_from_ebn0 = 0;  // SNR = Eb/N0 + this offset
    nlohmann::json diagnostics_summary;  // per detector x sweep point
    nlohmann::json adc_report;
    double wall_clock_seconds = 0.0;
    bool partial = false;
    std::string error;

    nlohmann::json to_json() const;
};

struct SweepResult {
    std::vector<BerRecord> records;
    RunManifest manifest;
    std::map<std::string, std::vector<double>> learning_curves;  // first point, trial 0
};

/// Pilot grids for the Q reference symbols: per-antenna orthogonal phase
/// ramps scrambled by a random QPSK phase per subcarrier, so that the per-
/// subcarrier pilot matrix satisfies P^H P = Q I.
std::vector<FrequencyGrid> make_pilot_grids(const SubframeConfig& cfg, std::uint64_t seed);

/// Runs one subframe end to end: impairment chain, detector training on the
/// Q reference symbols, detection of the N_d data symbols, bit-error counts.
TrialResult run_trial(const ExperimentConfig& cfg, const std::string& sweep_variable,
                      double sweep_value, int trial_index);

/// Optional per-trial callback (sweep point index, trial index); exceptions
/// thrown here or inside trials flag the run as partial.
using TrialHook = std::function<void(int, int)>;

SweepResult run_sweep(const ExperimentConfig& cfg, int workers = 1,
                      const TrialHook& hook = nullptr);

/// Writes ber.csv, manifest.json and learning_curve_<detector>.csv into
/// out_dir; optionally plot-ready .dat files per detector.
void emit_report(const SweepResult& result, const std::string& out_dir,
                 bool emit_gnuplot = false);

/// Parses a ber.csv produced by emit_report (round-trip checked in tests).
std::vector<BerRecord> parse_ber_csv(const std::string& path);

}  // namespace rcsd
