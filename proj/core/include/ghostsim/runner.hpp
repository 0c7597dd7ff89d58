#ifndef GHOSTSIM_RUNNER_HPP
#define GHOSTSIM_RUNNER_HPP

#include <functional>
#include <string>

#include "ghostsim/config.hpp"
#include "ghostsim/metrics.hpp"
#include "ghostsim/oracle.hpp"

namespace ghostsim {

struct RunResult {
    ExperimentConfig config;
    CorrelationMap map;           // finalized correlation, raw scale
    CorrelationMap map_rescaled;  // max = 1
    CorrelationMap reference;     // semi-analytic reference used for eps
    ErrorSeries series;           // eps at geometric snapshot shot counts
    ConvergenceFit fit;
    bool fit_valid = false;
    long shots = 0;
    double bandwidth = 0.0;  // delta q_PDC, rad/m
    double x_coh = 0.0;      // m
    double speedup = 0.0;    // rho_SA per transverse dimension
};

/// The deterministic reference map for a configuration (plane-wave gain; for
/// a Gaussian-pump source this is the SPWPA reference the run converges
/// towards up to pump-envelope corrections).
CorrelationMap reference_map(const ExperimentConfig& cfg, const GainTable& gain);

/// Full Monte Carlo run: sharded across threads, shot i drawing from the
/// (seed, i) substream so results do not depend on scheduling; eps is
/// snapshotted on a ~sqrt(2) geometric shot ladder. progress (optional) is
/// called at each snapshot with (shots so far, eps).
RunResult run_experiment(const ExperimentConfig& cfg,
                         const std::function<void(long, double)>& progress = {});

/// Write config, maps (binary grid + preview + csv), the eps series, and a
/// plain-text summary into out_dir (created if needed). f-f runs also get
/// the inverse-transform reconstruction.
void save_run(const RunResult& result, const std::string& out_dir);

}  // namespace ghostsim

#endif
