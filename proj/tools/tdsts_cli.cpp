#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "tdsts/commands.hpp"
#include "tdsts/oracle.hpp"

namespace {

tdsts::RunConfig load_or_default(const std::string& path) {
    if (!path.empty()) return tdsts::load_config_file(path);
    tdsts::RunConfig cfg;
    if (const char* env = std::getenv("TDSTS_FOCK_CUTOFF"))
        cfg.oracle.fock_cutoff = std::max(8, std::atoi(env));
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Closed-form observables of a displaced squeezed state under input and "
        "detector thermal noise, with covariance and truncated-Fock validation"};
    app.require_subcommand(1);

    std::string config_path;
    std::string kind = "position";
    std::string axis;
    std::vector<double> values;

    auto* evaluate = app.add_subcommand("evaluate", "time-grid observable table");
    evaluate->add_option("--config", config_path, "configuration file")->required();

    auto* density = app.add_subcommand("density", "density / wavefunction grids");
    density->add_option("--config", config_path, "configuration file")->required();
    density->add_option("--kind", kind, "position|momentum|wavefunction|rho")
        ->required();

    tdsts::validation::Options vopt;
    auto* validate =
        app.add_subcommand("validate", "closed forms against the numeric oracles");
    validate->add_option("--config", config_path, "configuration file (oracle block)");
    validate->add_option("--seed", vopt.seed, "draw seed");
    validate->add_option("--draws", vopt.draws, "covariance-oracle draws");
    validate->add_option("--fock-draws", vopt.fock_draws, "fock-oracle draws");
    validate->add_option("--wf-draws", vopt.wf_draws, "wavefunction-grid draws");
    validate->add_option("--fock-cap", vopt.fock_cap,
                         "largest cutoff the escalation may reach");
    validate->add_option("--inject-error", vopt.inject_tag,
                         "self-test: corrupt one tag and expect a failure");

    auto* sweep = app.add_subcommand("sweep", "cross product of one axis and the time grid");
    sweep->add_option("--config", config_path, "configuration file")->required();
    sweep->add_option("--axis", axis,
                      "r, phi, alpha.mod, alpha.arg, alpha.re, alpha.im, "
                      "tau1[k], tau2[k], T1[k], T2[k]")
        ->required();
    sweep->add_option("--values", values, "comma-separated axis values")
        ->required()
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (evaluate->parsed()) return tdsts::cmd_evaluate(load_or_default(config_path));
        if (density->parsed())
            return tdsts::cmd_density(load_or_default(config_path),
                                      tdsts::parse_density_kind(kind));
        if (sweep->parsed())
            return tdsts::cmd_sweep(load_or_default(config_path), axis, values);
        if (validate->parsed()) {
            const auto cfg = load_or_default(config_path);
            vopt.fock_cutoff = cfg.oracle.fock_cutoff;
            vopt.quad_points = cfg.oracle.quad_points;
            return tdsts::cmd_validate(vopt);
        }
    } catch (const tdsts::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const tdsts::oracle::NonConvergence& e) {
        std::cerr << "oracle non-convergence: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
