// Command-line front end: run Monte Carlo experiments, dump presets and
// semi-analytic references, and diff correlation maps.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "ghostsim/grid_io.hpp"
#include "ghostsim/presets.hpp"
#include "ghostsim/runner.hpp"

namespace {

ghostsim::ExperimentConfig resolve_config(const std::string& config_path,
                                          const std::string& preset_name)
{
    if (!config_path.empty() && !preset_name.empty())
        throw ghostsim::ConfigError("give either --config or --preset, not both");
    if (!config_path.empty()) return ghostsim::load_config(config_path);
    if (!preset_name.empty()) return ghostsim::preset(preset_name);
    throw ghostsim::ConfigError("one of --config or --preset is required");
}

std::string default_out_dir()
{
    const char* env = std::getenv("GHOSTSIM_OUT");
    return env ? env : "out";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-arm ghost-imaging Monte Carlo simulator"};
    app.require_subcommand(1);

    std::string config_path, preset_name, out_dir = default_out_dir();
    long shots = -1;
    long long seed = -1;
    int threads = -1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-c,--config", config_path, "configuration file");
        cmd->add_option("-p,--preset", preset_name, "named preset");
        cmd->add_option("-o,--out", out_dir, "output directory (env GHOSTSIM_OUT)");
    };

    CLI::App* run = app.add_subcommand("run", "run a Monte Carlo experiment");
    add_common(run);
    run->add_option("-n,--shots", shots, "override shot count");
    run->add_option("-s,--seed", seed, "override RNG seed");
    run->add_option("-t,--threads", threads, "override thread count (0 = all cores)");

    CLI::App* pre = app.add_subcommand("preset", "list presets or print one as a config");
    std::string dump_name;
    pre->add_option("name", dump_name, "preset to print (omit to list)");

    CLI::App* orc = app.add_subcommand("oracle", "write the semi-analytic reference map");
    add_common(orc);

    CLI::App* diff = app.add_subcommand("diff", "relative L2 distance between two map files");
    std::string file_a, file_b;
    diff->add_option("a", file_a, "first .gimg map")->required();
    diff->add_option("b", file_b, "second .gimg map (reference)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (pre->parsed()) {
            if (dump_name.empty()) {
                for (const auto& n : ghostsim::preset_names()) std::cout << n << "\n";
            } else {
                std::cout << ghostsim::serialize_config(ghostsim::preset(dump_name));
            }
            return 0;
        }
        if (diff->parsed()) {
            const auto a = ghostsim::load_gimg(file_a);
            const auto b = ghostsim::load_gimg(file_b);
            std::cout << ghostsim::epsilon(a, b) << "\n";
            return 0;
        }

        ghostsim::ExperimentConfig cfg = resolve_config(config_path, preset_name);
        if (shots >= 0) cfg.run.shots = shots;
        if (seed >= 0) cfg.run.seed = static_cast<unsigned long long>(seed);
        if (threads >= 0) cfg.run.threads = threads;
        cfg.run.out_dir = out_dir;

        if (orc->parsed()) {
            const auto gain = ghostsim::compute_gain(cfg.source_params(), cfg.lattice_spec());
            const auto ref = ghostsim::reference_map(cfg, gain);
            std::filesystem::create_directories(out_dir);
            ghostsim::save_gimg(ref, out_dir + "/reference.gimg");
            ghostsim::save_map_csv(ghostsim::max_rescaled(ref), out_dir + "/reference.csv");
            std::cout << "reference written to " << out_dir << "\n";
            return 0;
        }

        const auto result = ghostsim::run_experiment(cfg, [](long n, double eps) {
            std::cout << "shots " << n << "  eps " << eps << "\n";
        });
        ghostsim::save_run(result, out_dir);
        std::cout << "results written to " << out_dir << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
