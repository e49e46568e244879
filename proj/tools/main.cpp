#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rsv/config.hpp"
#include "rsv/execute.hpp"

namespace {

struct Overrides {
    std::optional<int> n;
    std::optional<double> eps;
    std::optional<double> t_end;
    std::optional<std::string> out;
    std::optional<unsigned long long> seed;
};

void add_common(CLI::App* sub, std::string& config_path, Overrides& ov) {
    sub->add_option("-c,--config", config_path, "JSON config file");
    sub->add_option("--n", ov.n, "override grid resolution");
    sub->add_option("--eps", ov.eps, "override dispersion parameter");
    sub->add_option("--t-end", ov.t_end, "override final time");
    sub->add_option("--out", ov.out, "override output directory");
    sub->add_option("--seed", ov.seed, "override probe RNG seed");
}

int run_mode(rsv::RunMode mode, const std::string& config_path, const Overrides& ov) {
    rsv::RunConfig cfg;
    if (!config_path.empty()) cfg = rsv::parse_config(config_path);
    cfg.mode = mode;
    if (ov.n) cfg.n = *ov.n;
    if (ov.eps) cfg.eps = *ov.eps;
    if (ov.t_end) {
        cfg.control.t_end = *ov.t_end;
        cfg.mms.t_end = *ov.t_end;
        cfg.picard.T = *ov.t_end;
    }
    if (ov.out) cfg.output.directory = *ov.out;
    if (ov.seed) cfg.probe.seed = *ov.seed;
    return rsv::execute(cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rsvub: dispersive shallow-water solver over uneven, moving bottoms"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides ov;

    CLI::App* simulate = app.add_subcommand("simulate", "time-step a scenario");
    CLI::App* picard = app.add_subcommand("picard", "frozen-coefficient iteration report");
    CLI::App* mms = app.add_subcommand("mms", "manufactured-solution convergence table");
    CLI::App* probe = app.add_subcommand("probe", "elliptic operator solve diagnostics");
    for (CLI::App* sub : {simulate, picard, mms, probe}) add_common(sub, config_path, ov);

    CLI11_PARSE(app, argc, argv);

    rsv::RunMode mode = rsv::RunMode::simulate;
    if (picard->parsed()) mode = rsv::RunMode::picard;
    if (mms->parsed()) mode = rsv::RunMode::mms_convergence;
    if (probe->parsed()) mode = rsv::RunMode::operator_probe;

    try {
        return run_mode(mode, config_path, ov);
    } catch (const rsv::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return rsv::exit_config_error;
    } catch (const rsv::VacuumError& e) {
        std::cerr << "vacuum: " << e.what() << '\n';
        return rsv::exit_vacuum;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
