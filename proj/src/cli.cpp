#include "hmw/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "hmw/geometry.hpp"
#include "hmw/grid.hpp"
#include "hmw/io.hpp"
#include "hmw/oracle.hpp"
#include "hmw/radial.hpp"
#include "hmw/spectrum.hpp"
#include "hmw/spinor.hpp"
#include "hmw/version.hpp"

namespace hmw {

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "eta",         "omega",       "mass",
        "dipole",      "e0",          "n_max",
        "l_min",       "l_max",       "spin",
        "grid_points", "rho_inf_sigma", "weak_field_threshold",
        "strict",      "allow_disclination", "n",
        "l",           "tol",         "out"};
    return keys;
}

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& value) {
    if (value.empty()) throw ConfigError(key, "empty value");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size() || errno == ERANGE || !std::isfinite(v))
        throw ConfigError(key, "expected a finite number, got '" + value + "'");
    return v;
}

int to_int(const std::string& key, const std::string& value) {
    if (value.empty()) throw ConfigError(key, "empty value");
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(value.c_str(), &end, 10);
    if (end != value.c_str() + value.size() || errno == ERANGE || v < -1000000000L ||
        v > 1000000000L)
        throw ConfigError(key, "expected an integer, got '" + value + "'");
    return static_cast<int>(v);
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError(key, "expected true/false/1/0, got '" + value + "'");
}

int to_spin(const std::string& key, const std::string& value) {
    if (value == "+1" || value == "1") return +1;
    if (value == "-1") return -1;
    if (value == "both") return 0;
    throw ConfigError(key, "expected +1, -1, or both, got '" + value + "'");
}

std::string spin_to_string(int s) {
    if (s == 0) return "both";
    return s > 0 ? "+1" : "-1";
}

void require_rotation(const RunConfig& cfg) {
    if (!(cfg.omega > 0.0))
        throw ConfigError("omega", "this command requires omega > 0");
}

int require_explicit_spin(const RunConfig& cfg) {
    if (cfg.spin == 0)
        throw ConfigError("spin", "this command requires an explicit spin (+1 or -1)");
    return cfg.spin;
}

std::vector<int> spin_list(const RunConfig& cfg) {
    if (cfg.spin == 0) return {-1, +1};
    return {cfg.spin};
}

nlohmann::json provenance(const std::string& cmd, const RunConfig& cfg,
                          int grid_points, double rho_inf) {
    nlohmann::json j;
    j["artifact"] = "hmw";
    j["version"] = kVersion;
    j["command"] = cmd;
    j["config"] = config_to_json(cfg);
    nlohmann::json grid;
    grid["points"] = grid_points;
    grid["rho_inf"] = rho_inf;
    j["grid"] = grid;
    return j;
}

nlohmann::json weak_field_json(const WeakFieldCheck& wf) {
    nlohmann::json j;
    j["ratio"] = wf.ratio;
    j["pass"] = wf.pass;
    return j;
}

double state_domain(const RunConfig& cfg, const ParticleParams& p,
                    const BackgroundParams& bg) {
    return std::sqrt(cfg.rho_inf_sigma / coupling_delta(p, bg));
}

int run_fields(const RunConfig& cfg, const std::string& prefix) {
    const BackgroundParams bg{cfg.eta, cfg.omega};
    double rho_edge = physical_radius(bg);
    if (!std::isfinite(rho_edge)) rho_edge = 1.0; // static background: unit window
    const RadialGrid grid(cfg.grid_points - 2, rho_edge);
    const EffectiveFieldCheck bcheck = effective_magnetic_field(bg, cfg.e0, grid);
    const CartanReport cartan = cartan_check(bg);

    CsvWriter csv({"rho", "g_tt", "g_tphi", "g_phiphi", "e_z", "b_rho", "b_eff_fd"});
    for (int i = 0; i < grid.n; ++i) {
        const double rho = grid.node(i);
        const MetricComponents mc = metric_components(bg, rho);
        const FieldTriple ft = induced_fields(bg, cfg.e0, rho);
        csv.add_row({rho, mc.g_tt, mc.g_tphi, mc.g_phiphi, ft.E[2], ft.B[0],
                     bcheck.fd_curl[static_cast<std::size_t>(i)]});
    }
    csv.write_file(prefix + ".csv");

    nlohmann::json j = provenance("fields", cfg, cfg.grid_points, rho_edge);
    nlohmann::json r;
    r["b_eff_closed_form"] = bcheck.closed_form;
    r["b_eff_fd_max_abs_deviation"] = bcheck.max_abs_deviation;
    r["physical_radius"] = physical_radius(bg); // serialized as null when infinite
    r["cartan_pass"] = cartan.pass;
    r["cartan_max_abs_residual"] = cartan.max_abs_residual;
    j["results"] = r;
    write_json_file(prefix + ".json", j);
    return 0;
}

int run_spectrum(const RunConfig& cfg, const std::string& prefix) {
    require_rotation(cfg);
    const BackgroundParams bg{cfg.eta, cfg.omega};
    const ParticleParams p{cfg.mass, cfg.dipole, cfg.e0};
    const LandauTable table =
        landau_table(p, bg, cfg.n_max, cfg.l_min, cfg.l_max, spin_list(cfg));
    const WeakFieldCheck wf = check_weak_field(p, bg, cfg.weak_field_threshold);

    CsvWriter csv({"n", "l", "s", "zeta", "delta", "energy", "beta",
                   "energy_nonrelativistic", "weak_field_ratio"});
    for (const SpectrumResult& lv : table.levels)
        csv.add_row({static_cast<double>(lv.qn.n), static_cast<double>(lv.qn.l),
                     static_cast<double>(lv.qn.s), lv.zeta, lv.delta, lv.energy,
                     lv.beta, lv.energy_nonrel, lv.weak_field_ratio});
    csv.write_file(prefix + ".csv");

    nlohmann::json j =
        provenance("spectrum", cfg, cfg.grid_points, state_domain(cfg, p, bg));
    nlohmann::json groups = nlohmann::json::array();
    for (const DegenerateGroup& g : table.degeneracies) {
        nlohmann::json jg;
        jg["energy_flat"] = g.energy_flat;
        jg["splitting"] = g.splitting;
        nlohmann::json members = nlohmann::json::array();
        for (std::size_t i = 0; i < g.members.size(); ++i) {
            nlohmann::json m;
            m["n"] = g.members[i].n;
            m["l"] = g.members[i].l;
            m["s"] = g.members[i].s;
            m["energy"] = g.energies_at_eta[i];
            members.push_back(m);
        }
        jg["members"] = members;
        groups.push_back(jg);
    }
    nlohmann::json r;
    r["level_count"] = table.levels.size();
    r["cyclotron_frequency"] = cyclotron_frequency(p, bg);
    r["weak_field"] = weak_field_json(wf);
    r["degeneracy_groups"] = groups;
    j["results"] = r;
    write_json_file(prefix + ".json", j);
    return (cfg.strict && !wf.pass) ? 1 : 0;
}

int run_verify(const RunConfig& cfg, const std::string& prefix) {
    require_rotation(cfg);
    const BackgroundParams bg{cfg.eta, cfg.omega};
    const ParticleParams p{cfg.mass, cfg.dipole, cfg.e0};
    const double delta = coupling_delta(p, bg);

    std::vector<QuantumNumbers> qn_set;
    for (int n = 0; n <= cfg.n_max; ++n)
        for (int l = cfg.l_min; l <= cfg.l_max; ++l)
            for (int s : spin_list(cfg)) qn_set.push_back(QuantumNumbers{n, l, s, 0.0});

    double beta_max = 0.0;
    for (const QuantumNumbers& qn : qn_set) {
        const double zeta = effective_angular_momentum(qn.l, qn.s, bg.eta);
        beta_max = std::max(beta_max, analytic_beta(qn.n, zeta, delta, bg.eta));
    }
    // enlarge the domain so the wall sits deep in the tail of every state
    const double rho_inf = oracle_domain(cfg.rho_inf_sigma, delta, beta_max);
    const RadialGrid grid(cfg.grid_points - 2, rho_inf);
    const std::vector<EigenReport> reports =
        verify_spectrum(p, bg, qn_set, cfg.tol, grid);

    CsvWriter csv({"n", "l", "s", "beta_analytic", "beta_numeric", "rel_error", "pass"});
    double max_rel = 0.0;
    int failures = 0;
    for (const EigenReport& r : reports) {
        csv.add_row({static_cast<double>(r.n), static_cast<double>(r.l),
                     static_cast<double>(r.s), r.beta_analytic, r.beta_numeric,
                     r.rel_error, r.pass ? 1.0 : 0.0});
        max_rel = std::max(max_rel, r.rel_error);
        if (!r.pass) ++failures;
    }
    csv.write_file(prefix + ".csv");

    nlohmann::json j = provenance("verify", cfg, cfg.grid_points, rho_inf);
    nlohmann::json r;
    r["state_count"] = reports.size();
    r["max_rel_error"] = max_rel;
    r["failure_count"] = failures;
    r["pass"] = failures == 0;
    r["tol"] = cfg.tol;
    j["results"] = r;
    write_json_file(prefix + ".json", j);
    return failures == 0 ? 0 : 1;
}

int run_wavefunction(const RunConfig& cfg, const std::string& prefix) {
    require_rotation(cfg);
    const int s = require_explicit_spin(cfg);
    const BackgroundParams bg{cfg.eta, cfg.omega};
    const ParticleParams p{cfg.mass, cfg.dipole, cfg.e0};
    const QuantumNumbers qn{cfg.n, cfg.l, s, 0.0};
    const double rho_inf = state_domain(cfg, p, bg);
    const RadialGrid grid(cfg.grid_points - 2, rho_inf);

    const WavefunctionTable wt = normalize(qn, p, bg, grid);
    CsvWriter csv({"rho", "xi", "probability_density"});
    for (int i = 0; i < grid.n; ++i) {
        const double rho = grid.node(i);
        const double v = wt.values[static_cast<std::size_t>(i)];
        csv.add_row({rho, v, bg.eta * rho * v * v});
    }
    csv.write_file(prefix + ".csv");

    const SpinorTable st = build_spinor(qn, p, bg, grid);
    CsvWriter spinor_csv({"rho", "psi0_re", "psi0_im", "psi1_re", "psi1_im", "psi2_re",
                          "psi2_im", "psi3_re", "psi3_im"});
    for (int i = 0; i < grid.n; ++i) {
        const Vec4& v = st.psi[static_cast<std::size_t>(i)];
        spinor_csv.add_row({grid.node(i), v[0].real(), v[0].imag(), v[1].real(),
                            v[1].imag(), v[2].real(), v[2].imag(), v[3].real(),
                            v[3].imag()});
    }
    spinor_csv.write_file(prefix + "_spinor.csv");

    const WeakFieldCheck wf = check_weak_field(p, bg, cfg.weak_field_threshold);
    nlohmann::json j = provenance("wavefunction", cfg, cfg.grid_points, rho_inf);
    nlohmann::json r;
    r["energy"] = st.energy;
    r["zeta"] = effective_angular_momentum(qn.l, qn.s, bg.eta);
    r["delta"] = coupling_delta(p, bg);
    r["normalization"] = wt.normalization;
    r["tail_mass"] = wt.tail_mass;
    r["tail_warning"] = wt.tail_warning;
    r["spinor_prefactor"] = st.prefactor;
    r["charge"] = charge(st, bg);
    r["dirac_residual"] = dirac_residual(st, p, bg);
    r["weak_field"] = weak_field_json(wf);
    j["results"] = r;
    write_json_file(prefix + ".json", j);
    return (cfg.strict && !wf.pass) ? 1 : 0;
}

int run_currents(const RunConfig& cfg, const std::string& prefix) {
    require_rotation(cfg);
    const int s = require_explicit_spin(cfg);
    const BackgroundParams bg{cfg.eta, cfg.omega};
    const ParticleParams p{cfg.mass, cfg.dipole, cfg.e0};
    const QuantumNumbers qn{cfg.n, cfg.l, s, 0.0};
    const double rho_inf = state_domain(cfg, p, bg);
    const RadialGrid grid(cfg.grid_points - 2, rho_inf);

    const SpinorTable st = build_spinor(qn, p, bg, grid);
    const std::vector<std::array<double, 4>> bil = bilinear_current(st, bg);
    const GordonCurrents gc = gordon_currents(st, p, bg);
    const double dev = gordon_max_deviation(gc, bil);

    CsvWriter csv({"rho", "j_t", "j_rho", "j_phi", "j_z", "conv_t", "conv_rho",
                   "conv_phi", "conv_z", "spin_t", "spin_rho", "spin_phi", "spin_z",
                   "m_1", "m_2", "m_3", "p_1", "p_2", "p_3"});
    for (int i = gc.margin; i < grid.n - gc.margin; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        csv.add_row({grid.node(i), gc.total[k][0], gc.total[k][1], gc.total[k][2],
                     gc.total[k][3], gc.convection[k][0], gc.convection[k][1],
                     gc.convection[k][2], gc.convection[k][3], gc.spin[k][0],
                     gc.spin[k][1], gc.spin[k][2], gc.spin[k][3],
                     gc.magnetization[k][0], gc.magnetization[k][1],
                     gc.magnetization[k][2], gc.polarization[k][0],
                     gc.polarization[k][1], gc.polarization[k][2]});
    }
    csv.write_file(prefix + ".csv");

    const WeakFieldCheck wf = check_weak_field(p, bg, cfg.weak_field_threshold);
    nlohmann::json j = provenance("currents", cfg, cfg.grid_points, rho_inf);
    nlohmann::json r;
    r["energy"] = st.energy;
    r["gordon_max_deviation"] = dev;
    r["charge"] = charge(st, bg);
    r["weak_field"] = weak_field_json(wf);
    j["results"] = r;
    write_json_file(prefix + ".json", j);
    return (cfg.strict && !wf.pass) ? 1 : 0;
}

int run_limits(const RunConfig& cfg, const std::string& prefix) {
    require_rotation(cfg);
    const BackgroundParams bg{cfg.eta, cfg.omega};
    const BackgroundParams flat{1.0, cfg.omega};
    const ParticleParams p{cfg.mass, cfg.dipole, cfg.e0};

    CsvWriter csv({"n", "l", "s", "zeta", "energy", "energy_flat", "flat_shift",
                   "energy_nonrel", "nonrel_remainder"});
    int count = 0;
    for (int n = 0; n <= cfg.n_max; ++n)
        for (int l = cfg.l_min; l <= cfg.l_max; ++l)
            for (int s : spin_list(cfg)) {
                const QuantumNumbers qn{n, l, s, 0.0};
                const double zeta = effective_angular_momentum(l, s, cfg.eta);
                const double e = energy_level(qn, p, bg);
                const double e_flat = energy_level(qn, p, flat);
                const double e_nr = nonrelativistic_energy(qn, p, bg);
                csv.add_row({static_cast<double>(n), static_cast<double>(l),
                             static_cast<double>(s), zeta, e, e_flat, e - e_flat, e_nr,
                             e - e_nr});
                ++count;
            }
    csv.write_file(prefix + ".csv");

    const WeakFieldCheck wf = check_weak_field(p, bg, cfg.weak_field_threshold);
    nlohmann::json j =
        provenance("limits", cfg, cfg.grid_points, state_domain(cfg, p, bg));
    nlohmann::json r;
    r["state_count"] = count;
    r["cyclotron_frequency"] = cyclotron_frequency(p, bg);
    r["weak_field"] = weak_field_json(wf);
    j["results"] = r;
    write_json_file(prefix + ".json", j);
    return (cfg.strict && !wf.pass) ? 1 : 0;
}

} // namespace

KeyValues read_key_value_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open " + path);
    KeyValues kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config", "line " + std::to_string(lineno) +
                                            ": expected key=value");
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config",
                              "line " + std::to_string(lineno) + ": empty key");
        kv[key] = value; // a later line overrides an earlier one
    }
    return kv;
}

RunConfig parse_config(const KeyValues& file_values, const KeyValues& overrides) {
    KeyValues merged = file_values;
    for (const auto& [k, v] : overrides) merged[k] = v;
    for (const auto& [k, v] : merged)
        if (known_keys().find(k) == known_keys().end())
            throw ConfigError(k, "unknown key");
    for (const char* req : {"eta", "omega", "mass", "dipole", "e0"})
        if (merged.find(req) == merged.end())
            throw ConfigError(req, "required key missing");

    RunConfig cfg;
    cfg.eta = to_double("eta", merged.at("eta"));
    cfg.omega = to_double("omega", merged.at("omega"));
    cfg.mass = to_double("mass", merged.at("mass"));
    cfg.dipole = to_double("dipole", merged.at("dipole"));
    cfg.e0 = to_double("e0", merged.at("e0"));
    if (merged.count("n_max")) cfg.n_max = to_int("n_max", merged.at("n_max"));
    if (merged.count("l_min")) cfg.l_min = to_int("l_min", merged.at("l_min"));
    if (merged.count("l_max")) cfg.l_max = to_int("l_max", merged.at("l_max"));
    if (merged.count("spin")) cfg.spin = to_spin("spin", merged.at("spin"));
    if (merged.count("grid_points"))
        cfg.grid_points = to_int("grid_points", merged.at("grid_points"));
    if (merged.count("rho_inf_sigma"))
        cfg.rho_inf_sigma = to_double("rho_inf_sigma", merged.at("rho_inf_sigma"));
    if (merged.count("weak_field_threshold"))
        cfg.weak_field_threshold =
            to_double("weak_field_threshold", merged.at("weak_field_threshold"));
    if (merged.count("strict")) cfg.strict = to_bool("strict", merged.at("strict"));
    if (merged.count("allow_disclination"))
        cfg.allow_disclination =
            to_bool("allow_disclination", merged.at("allow_disclination"));
    if (merged.count("n")) cfg.n = to_int("n", merged.at("n"));
    if (merged.count("l")) cfg.l = to_int("l", merged.at("l"));
    if (merged.count("tol")) cfg.tol = to_double("tol", merged.at("tol"));
    if (merged.count("out")) cfg.out = merged.at("out");

    validate_config(cfg);
    return cfg;
}

void validate_config(const RunConfig& cfg) {
    if (!(cfg.eta > 0.0)) throw ConfigError("eta", "must be positive");
    if (cfg.eta > 1.0 && !cfg.allow_disclination)
        throw ConfigError("eta",
                          "must be <= 1 (set allow_disclination=true to model a "
                          "disclination with eta > 1)");
    if (!(cfg.omega >= 0.0)) throw ConfigError("omega", "must be >= 0");
    if (!(cfg.mass > 0.0)) throw ConfigError("mass", "must be positive");
    if (!(cfg.dipole > 0.0)) throw ConfigError("dipole", "must be positive");
    if (!(cfg.e0 > 0.0)) throw ConfigError("e0", "must be positive");
    if (cfg.n_max < 0) throw ConfigError("n_max", "must be >= 0");
    if (cfg.l_min > cfg.l_max) throw ConfigError("l_min", "must be <= l_max");
    if (cfg.spin != 0 && cfg.spin != 1 && cfg.spin != -1)
        throw ConfigError("spin", "must be +1, -1, or both");
    if (cfg.grid_points < 102) throw ConfigError("grid_points", "must be >= 102");
    if (!(cfg.rho_inf_sigma >= 30.0))
        throw ConfigError("rho_inf_sigma", "must be >= 30");
    if (!(cfg.weak_field_threshold > 0.0))
        throw ConfigError("weak_field_threshold", "must be positive");
    if (cfg.n < 0) throw ConfigError("n", "must be >= 0");
    if (!(cfg.tol >= 0.0)) throw ConfigError("tol", "must be >= 0");
}

nlohmann::json config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["eta"] = cfg.eta;
    j["omega"] = cfg.omega;
    j["mass"] = cfg.mass;
    j["dipole"] = cfg.dipole;
    j["e0"] = cfg.e0;
    j["n_max"] = cfg.n_max;
    j["l_min"] = cfg.l_min;
    j["l_max"] = cfg.l_max;
    j["spin"] = spin_to_string(cfg.spin);
    j["grid_points"] = cfg.grid_points;
    j["rho_inf_sigma"] = cfg.rho_inf_sigma;
    j["weak_field_threshold"] = cfg.weak_field_threshold;
    j["strict"] = cfg.strict;
    j["allow_disclination"] = cfg.allow_disclination;
    j["n"] = cfg.n;
    j["l"] = cfg.l;
    j["tol"] = cfg.tol;
    j["out"] = cfg.out;
    return j;
}

int run_command(const std::string& cmd, const RunConfig& cfg) {
    validate_config(cfg);
    const std::string prefix = cfg.out.empty() ? cmd : cfg.out;
    if (cmd == "fields") return run_fields(cfg, prefix);
    if (cmd == "spectrum") return run_spectrum(cfg, prefix);
    if (cmd == "verify") return run_verify(cfg, prefix);
    if (cmd == "wavefunction") return run_wavefunction(cfg, prefix);
    if (cmd == "currents") return run_currents(cfg, prefix);
    if (cmd == "limits") return run_limits(cfg, prefix);
    throw ConfigError("command", "unknown command '" + cmd +
                                     "' (expected fields, spectrum, verify, "
                                     "wavefunction, currents, or limits)");
}

} // namespace hmw
