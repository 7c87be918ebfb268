#include "hmw/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hmw {

void validate(const QuantumNumbers& qn) {
    if (qn.n < 0) throw std::invalid_argument("n: radial quantum number must be >= 0");
    if (qn.s != 1 && qn.s != -1)
        throw std::invalid_argument("s: spin polarization must be +1 or -1");
    if (qn.k != 0.0)
        throw std::invalid_argument(
            "k: only the k = 0 planar bound-state problem is supported");
}

void validate(const ParticleParams& p) {
    if (!(p.m > 0.0) || !std::isfinite(p.m))
        throw std::invalid_argument("mass: must be positive and finite");
    if (!(p.d > 0.0) || !std::isfinite(p.d))
        throw std::invalid_argument("dipole: must be positive and finite");
    if (!(p.e0 > 0.0) || !std::isfinite(p.e0))
        throw std::invalid_argument("e0: must be positive and finite");
}

double effective_angular_momentum(int l, int s, double eta) {
    const double ls = static_cast<double>(l);
    const double ss = static_cast<double>(s);
    return ls + 0.5 * (1.0 - ss) + 0.5 * ss * (1.0 - eta);
}

double coupling_delta(const ParticleParams& p, const BackgroundParams& bg) {
    return p.d * p.e0 * bg.omega * bg.eta;
}

double beta_parameter(double energy, const QuantumNumbers& qn, const ParticleParams& p,
                      const BackgroundParams& bg) {
    const double zeta = effective_angular_momentum(qn.l, qn.s, bg.eta);
    const double delta = coupling_delta(p, bg);
    const double shifted = energy + bg.omega * (static_cast<double>(qn.l) + 0.5);
    const double mass_term = p.m + static_cast<double>(qn.s) * p.d * p.e0;
    return shifted * shifted - mass_term * mass_term -
           2.0 * static_cast<double>(qn.s) * delta * zeta / bg.eta - 2.0 * delta;
}

double energy_level(const QuantumNumbers& qn, const ParticleParams& p,
                    const BackgroundParams& bg) {
    const double zeta = effective_angular_momentum(qn.l, qn.s, bg.eta);
    const double delta = coupling_delta(p, bg);
    const double mass_term = p.m + static_cast<double>(qn.s) * p.d * p.e0;
    const double filling = static_cast<double>(qn.n) +
                           std::abs(zeta) / (2.0 * bg.eta) +
                           static_cast<double>(qn.s) * zeta / (2.0 * bg.eta) + 1.0;
    return std::sqrt(mass_term * mass_term + 4.0 * delta * filling) -
           bg.omega * (static_cast<double>(qn.l) + 0.5);
}

// Mirrors energy_level operation for operation, with zeta and delta replaced
// by their exact eta = 1 values, so the flat limit of the general formula and
// this specialization agree bitwise.
double energy_level_minkowski(const QuantumNumbers& qn, const ParticleParams& p,
                              double omega) {
    const double zeta =
        (qn.s > 0) ? static_cast<double>(qn.l) : static_cast<double>(qn.l + 1);
    const double delta = p.d * p.e0 * omega;
    const double mass_term = p.m + static_cast<double>(qn.s) * p.d * p.e0;
    const double filling = static_cast<double>(qn.n) + std::abs(zeta) / 2.0 +
                           static_cast<double>(qn.s) * zeta / 2.0 + 1.0;
    return std::sqrt(mass_term * mass_term + 4.0 * delta * filling) -
           omega * (static_cast<double>(qn.l) + 0.5);
}

double analytic_beta(int n, double zeta, double delta, double eta) {
    return 4.0 * delta * (static_cast<double>(n) + std::abs(zeta) / (2.0 * eta) + 0.5);
}

double nonrelativistic_energy(const QuantumNumbers& qn, const ParticleParams& p,
                              const BackgroundParams& bg) {
    const double zeta = effective_angular_momentum(qn.l, qn.s, bg.eta);
    const double delta = coupling_delta(p, bg);
    const double filling = static_cast<double>(qn.n) +
                           std::abs(zeta) / (2.0 * bg.eta) +
                           static_cast<double>(qn.s) * zeta / (2.0 * bg.eta) + 1.0;
    return p.m + (2.0 * delta / p.m) * filling + static_cast<double>(qn.s) * p.d * p.e0 -
           bg.omega * (static_cast<double>(qn.l) + 0.5);
}

double cyclotron_frequency(const ParticleParams& p, const BackgroundParams& bg) {
    return 2.0 * coupling_delta(p, bg) / p.m;
}

WeakFieldCheck check_weak_field(const ParticleParams& p, const BackgroundParams& bg,
                                double threshold) {
    WeakFieldCheck c;
    c.ratio = p.d * p.e0 / (bg.omega * bg.eta);
    c.pass = c.ratio <= threshold;
    return c;
}

namespace {

SpectrumResult solve_state(const QuantumNumbers& qn, const ParticleParams& p,
                           const BackgroundParams& bg, double weak_ratio) {
    SpectrumResult r;
    r.qn = qn;
    r.zeta = effective_angular_momentum(qn.l, qn.s, bg.eta);
    r.delta = coupling_delta(p, bg);
    r.energy = energy_level(qn, p, bg);
    r.beta = beta_parameter(r.energy, qn, p, bg);
    r.energy_nonrel = nonrelativistic_energy(qn, p, bg);
    r.weak_field_ratio = weak_ratio;
    return r;
}

} // namespace

LandauTable landau_table(const ParticleParams& p, const BackgroundParams& bg, int n_max,
                         int l_min, int l_max, bool both_s, Exec exec) {
    const std::vector<int> spins =
        both_s ? std::vector<int>{-1, +1} : std::vector<int>{+1};
    return landau_table(p, bg, n_max, l_min, l_max, spins, exec);
}

LandauTable landau_table(const ParticleParams& p, const BackgroundParams& bg, int n_max,
                         int l_min, int l_max, const std::vector<int>& spins,
                         Exec exec) {
    validate(p);
    if (!(bg.eta > 0.0) || !std::isfinite(bg.eta))
        throw std::invalid_argument("eta: must be positive and finite");
    if (!(bg.omega > 0.0))
        throw std::invalid_argument("omega: bound states require omega > 0");
    if (n_max < 0) throw std::invalid_argument("n_max: must be >= 0");
    if (l_min > l_max) throw std::invalid_argument("l_min: must be <= l_max");
    if (spins.empty()) throw std::invalid_argument("spins: must not be empty");
    for (int s : spins)
        if (s != 1 && s != -1)
            throw std::invalid_argument("spins: entries must be +1 or -1");

    std::vector<QuantumNumbers> states;
    for (int n = 0; n <= n_max; ++n)
        for (int l = l_min; l <= l_max; ++l)
            for (int s : spins) states.push_back(QuantumNumbers{n, l, s, 0.0});
    // ascending (n, l, s), s = -1 before s = +1
    std::sort(states.begin(), states.end(), [](const QuantumNumbers& a,
                                               const QuantumNumbers& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.l != b.l) return a.l < b.l;
        return a.s < b.s;
    });

    const double weak_ratio = check_weak_field(p, bg).ratio;
    const int count = static_cast<int>(states.size());

    LandauTable table;
    table.levels.resize(states.size());
    if (exec == Exec::openmp) {
#pragma omp parallel for
        for (int i = 0; i < count; ++i)
            table.levels[static_cast<std::size_t>(i)] =
                solve_state(states[static_cast<std::size_t>(i)], p, bg, weak_ratio);
    } else {
        for (int i = 0; i < count; ++i)
            table.levels[static_cast<std::size_t>(i)] =
                solve_state(states[static_cast<std::size_t>(i)], p, bg, weak_ratio);
    }

    // Degeneracy bookkeeping is anchored to the flat eta = 1 table: states
    // sharing a flat energy (1e-12 absolute) form one group, and the spread
    // of their energies at the requested eta is the reported splitting.
    const BackgroundParams flat{1.0, bg.omega};
    const double tol = 1e-12;
    std::vector<double> flat_energy(states.size());
    for (std::size_t i = 0; i < states.size(); ++i)
        flat_energy[i] = energy_level(states[i], p, flat);
    // group serially in deterministic (n, l, s) order
    std::vector<DegenerateGroup> glist;
    for (std::size_t i = 0; i < states.size(); ++i) {
        int hit = -1;
        for (std::size_t gi = 0; gi < glist.size(); ++gi)
            if (std::fabs(glist[gi].energy_flat - flat_energy[i]) <= tol) {
                hit = static_cast<int>(gi);
                break;
            }
        if (hit < 0) {
            DegenerateGroup g;
            g.energy_flat = flat_energy[i];
            glist.push_back(g);
            hit = static_cast<int>(glist.size()) - 1;
        }
        glist[static_cast<std::size_t>(hit)].members.push_back(states[i]);
        glist[static_cast<std::size_t>(hit)].energies_at_eta.push_back(
            table.levels[i].energy);
    }
    for (auto& g : glist) {
        const auto [lo, hi] =
            std::minmax_element(g.energies_at_eta.begin(), g.energies_at_eta.end());
        g.splitting = *hi - *lo;
    }
    table.degeneracies = std::move(glist);
    return table;
}

} // namespace hmw
