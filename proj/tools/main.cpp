#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hmw/cli.hpp"
#include "hmw/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Relativistic dipole bound states in a rotating conical background"};
    app.require_subcommand(0, 1);

    std::string config_path;
    std::string eta, omega, mass, dipole, e0, n_max, l_min, l_max, spin, grid_points,
        rho_inf_sigma, weak_field_threshold, n, l, tol, out;
    bool strict = false;
    bool allow_disclination = false;

    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--eta", eta, "deficit parameter in (0, 1]");
    app.add_option("--omega", omega, "frame angular velocity (>= 0)");
    app.add_option("--mass", mass, "particle rest mass");
    app.add_option("--dipole", dipole, "permanent electric dipole moment");
    app.add_option("--e0", e0, "external axial electric field strength");
    app.add_option("--n-max", n_max, "largest radial quantum number in tables");
    app.add_option("--l-min", l_min, "smallest orbital quantum number in tables");
    app.add_option("--l-max", l_max, "largest orbital quantum number in tables");
    app.add_option("--spin", spin, "spin polarization: +1, -1, or both");
    app.add_option("--grid-points", grid_points, "closed radial node count (>= 102)");
    app.add_option("--rho-inf-sigma", rho_inf_sigma,
                   "dimensionless domain size delta*rho_inf^2 (>= 30)");
    app.add_option("--weak-field-threshold", weak_field_threshold,
                   "upper bound on d e0 / (omega eta)");
    app.add_flag("--strict", strict, "exit 1 when the weak-field check fails");
    app.add_flag("--allow-disclination", allow_disclination,
                 "accept eta > 1 (solid-state disclination analogy)");
    app.add_option("--n", n, "radial quantum number of the selected state");
    app.add_option("--l", l, "orbital quantum number of the selected state");
    app.add_option("--tol", tol, "verification tolerance");
    app.add_option("--out", out, "output path prefix (default: command name)");
    app.set_version_flag("--version", hmw::kVersion);

    const char* names[] = {"fields", "spectrum", "verify", "wavefunction", "currents",
                           "limits"};
    const char* briefs[] = {
        "metric, frame fields and effective magnetic field along the radius",
        "bound-state level table with degeneracy grouping",
        "cross-check the closed-form eigenvalues against a finite-difference solver",
        "normalized radial profile and Dirac spinor of one bound state",
        "probability current of one bound state, split into convection and spin parts",
        "flat-space and nonrelativistic limits of the level table"};
    for (int i = 0; i < 6; ++i) app.add_subcommand(names[i], briefs[i])->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto subs = app.get_subcommands();
    if (subs.empty()) {
        std::cerr << "error: a command is required (fields, spectrum, verify, "
                     "wavefunction, currents, limits)\n";
        return 2;
    }
    const std::string cmd = subs.front()->get_name();

    try {
        hmw::KeyValues file_values;
        if (app.count("--config") > 0)
            file_values = hmw::read_key_value_file(config_path);
        hmw::KeyValues overrides;
        auto put = [&](const char* flag, const char* key, const std::string& value) {
            if (app.count(flag) > 0) overrides[key] = value;
        };
        put("--eta", "eta", eta);
        put("--omega", "omega", omega);
        put("--mass", "mass", mass);
        put("--dipole", "dipole", dipole);
        put("--e0", "e0", e0);
        put("--n-max", "n_max", n_max);
        put("--l-min", "l_min", l_min);
        put("--l-max", "l_max", l_max);
        put("--spin", "spin", spin);
        put("--grid-points", "grid_points", grid_points);
        put("--rho-inf-sigma", "rho_inf_sigma", rho_inf_sigma);
        put("--weak-field-threshold", "weak_field_threshold", weak_field_threshold);
        put("--n", "n", n);
        put("--l", "l", l);
        put("--tol", "tol", tol);
        put("--out", "out", out);
        if (strict) overrides["strict"] = "true";
        if (allow_disclination) overrides["allow_disclination"] = "true";

        const hmw::RunConfig cfg = hmw::parse_config(file_values, overrides);
        return hmw::run_command(cmd, cfg);
    } catch (const hmw::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
