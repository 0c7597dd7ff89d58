#include "ghostsim/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <thread>
#include <vector>

#include "ghostsim/detection.hpp"
#include "ghostsim/grid_io.hpp"

namespace ghostsim {

namespace {

std::vector<std::complex<double>> detection_pupil(const ExperimentConfig& cfg,
                                                  const GainTable& gain)
{
    const double q_cut = cfg.stripe_q_cut();
    if (q_cut < 0.0) return {};
    if (cfg.detection.pupil_shape == "matched") return make_matched_pupil(gain, q_cut);
    if (cfg.detection.pupil_shape == "object_matched")
        return make_object_matched_pupil(gain, cfg.make_object(), q_cut);
    if (cfg.detection.pupil_shape == "hard") return make_stripe_filter(gain.spec, q_cut);
    throw ConfigError("detection: unknown pupil_shape " + cfg.detection.pupil_shape);
}

}  // namespace

CorrelationMap reference_map(const ExperimentConfig& cfg, const GainTable& gain)
{
    const ObjectMask obj = cfg.make_object();
    const SourceParams p = cfg.source_params();
    const double band = cfg.filter_domega();
    const std::vector<std::complex<double>> pupil = detection_pupil(cfg, gain);
    switch (cfg.mode()) {
        case CorrelatorMode::FfFixedX1: {
            CorrelationMap m = oracle_ff(gain, obj, cfg.detection.x1_index, band);
            if (!pupil.empty()) apply_reference_mask(m, pupil);
            return m;
        }
        case CorrelatorMode::FfSpatialAverage:
            return oracle_ff_sa(gain, obj, band).exact;
        case CorrelatorMode::TelescopePixelX1:
            return oracle_telescope_pixel(gain, obj, cfg.detection.x1_index, band,
                                          cfg.delta_z_m(), p.k_medium, pupil)
                .exact;
        case CorrelatorMode::TelescopeBucket:
            return oracle_telescope_bucket(gain, obj, band, cfg.delta_z_m(), p.k_medium, pupil);
    }
    throw ContractViolation("reference_map: unreachable mode");
}

namespace {

std::vector<long> snapshot_ladder(long shots)
{
    std::vector<long> pts;
    double n = 16.0;
    while (static_cast<long>(n) < shots) {
        const long p = static_cast<long>(n);
        if (pts.empty() || p > pts.back()) pts.push_back(p);
        n *= std::numbers::sqrt2;
    }
    if (pts.empty() || pts.back() != shots) pts.push_back(shots);
    return pts;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg,
                         const std::function<void(long, double)>& progress)
{
    const LatticeSpec spec = cfg.lattice_spec();
    const SourceParams params = cfg.source_params();
    const GainTable gain = compute_gain(params, spec);
    const ObjectMask obj = cfg.make_object();
    const CorrelatorMode mode = cfg.mode();
    const double band = cfg.filter_domega();
    const std::vector<std::complex<double>> stripe = detection_pupil(cfg, gain);
    const bool telescope =
        (mode == CorrelatorMode::TelescopePixelX1 || mode == CorrelatorMode::TelescopeBucket);
    const double delta_z = telescope ? cfg.delta_z_m() : 0.0;

    RunResult result;
    result.config = cfg;
    result.reference = reference_map(cfg, gain);
    result.bandwidth = bandwidth_pdc(gain, band);
    result.x_coh = near_field_correlation(gain, params).x_coh;
    result.speedup = speedup_estimate(result.bandwidth, params.pump_waist);

    const long shots = cfg.run.shots;
    if (shots < 2) throw ConfigError("run: need at least 2 shots");
    int threads = cfg.run.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (static_cast<long>(threads) > shots) threads = static_cast<int>(shots);

    std::vector<CorrelationAccumulator> shards(
        static_cast<std::size_t>(threads),
        CorrelationAccumulator(mode, spec, cfg.detection.x1_index));

    auto one_shot = [&](long s, CorrelationAccumulator& acc) {
        ShotRng rng(cfg.run.seed, static_cast<std::uint64_t>(s));
        FieldPair fp = generate_shot(params, gain, rng);
        if (band >= 0.0) {
            apply_interference_filter(fp.b1, band);
            apply_interference_filter(fp.b2, band);
        }
        const ComplexField c1 = propagate_test_ff(fp.b1, obj);
        ComplexField ref = stripe.empty() ? fp.b2 : apply_focal_plane_filter(fp.b2, stripe);
        const ComplexField c2 = telescope
                                    ? propagate_reference_telescope(ref, delta_z, params.k_medium)
                                    : propagate_reference_ff(ref);
        IntensityFrame i1 = detect(c1);
        IntensityFrame i2 = detect(c2);
        if (cfg.detection.vacuum_correction) {
            i1 = vacuum_correction(i1, spec);
            i2 = vacuum_correction(i2, spec);
        }
        acc.accumulate(i1, i2);
    };

    // Shot s always lands in shard s % threads, so a fixed thread count is
    // bit-reproducible regardless of scheduling.
    const auto ladder = snapshot_ladder(shots);
    long done = 0;
    for (long target : ladder) {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t]() {
                for (long s = done; s < target; ++s)
                    if (s % threads == t) one_shot(s, shards[static_cast<std::size_t>(t)]);
            });
        for (auto& th : pool) th.join();
        done = target;

        CorrelationAccumulator merged = shards[0];
        for (std::size_t t = 1; t < shards.size(); ++t) merged.merge(shards[t]);
        const double eps = epsilon(merged.finalize(), result.reference);
        result.series.shots.push_back(done);
        result.series.eps.push_back(eps);
        if (progress) progress(done, eps);
        if (done == shots) result.map = merged.finalize();
    }

    result.shots = shots;
    result.map_rescaled = max_rescaled(result.map);
    if (result.series.shots.size() >= 3) {
        try {
            result.fit = fit_convergence(result.series);
            result.fit_valid = true;
        } catch (const FitError&) {
            result.fit_valid = false;
        }
    }
    return result;
}

void save_run(const RunResult& r, const std::string& out_dir)
{
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const fs::path d(out_dir);
    save_config(r.config, (d / "config.ini").string());
    save_gimg(r.map, (d / "map.gimg").string());
    save_gimg(r.map_rescaled, (d / "map_rescaled.gimg").string());
    save_gimg(r.reference, (d / "reference.gimg").string());
    save_pgm_preview(r.map_rescaled, (d / "preview.pgm").string());
    save_map_csv(r.map_rescaled, (d / "map.csv").string());
    save_error_series_csv(r.series, (d / "epsilon.csv").string());
    const CorrelatorMode mode = r.config.mode();
    if (mode == CorrelatorMode::FfFixedX1 || mode == CorrelatorMode::FfSpatialAverage)
        save_gimg(ift_reconstruct(r.map_rescaled), (d / "ift.gimg").string());

    std::ofstream sum((d / "summary.txt").string());
    sum.precision(10);
    sum << "mode: " << to_string(mode) << "\n"
        << "shots: " << r.shots << "\n"
        << "eps_final: " << (r.series.eps.empty() ? -1.0 : r.series.eps.back()) << "\n"
        << "bandwidth_pdc [1/m]: " << r.bandwidth << "\n"
        << "x_coh [m]: " << r.x_coh << "\n"
        << "rho_sa: " << r.speedup << "\n";
    if (r.fit_valid)
        sum << "fit_d0 [1/shot]: " << r.fit.d0 << "\n"
            << "fit_d1: " << r.fit.d1 << "\n"
            << "fit_residual: " << r.fit.residual << "\n";
}

}  // namespace ghostsim
