#pragma once

#include <vector>

#include "hmw/geometry.hpp"
#include "hmw/parallel.hpp"

namespace hmw {

// Bound-state labels: radial n >= 0, orbital integer l, spin polarization
// s = +1/-1 along z, longitudinal wavenumber k (pinned to 0 for every
// bound-state operation; j = l + 1/2 is derived).
struct QuantumNumbers {
    int n = 0;
    int l = 0;
    int s = +1;
    double k = 0.0;
};

struct ParticleParams {
    double m = 1.0;  // rest mass
    double d = 0.0;  // permanent electric dipole moment
    double e0 = 0.0; // external electric field strength
};

void validate(const QuantumNumbers& qn);
void validate(const ParticleParams& p);

// zeta_s = l + (1-s)/2 + s(1-eta)/2
double effective_angular_momentum(int l, int s, double eta);

// delta = d e0 omega eta
double coupling_delta(const ParticleParams& p, const BackgroundParams& bg);

// beta_s(E) = [E + omega(l+1/2)]^2 - [m + s d e0]^2 - 2 s delta zeta_s / eta - 2 delta
double beta_parameter(double energy, const QuantumNumbers& qn, const ParticleParams& p,
                      const BackgroundParams& bg);

// E = sqrt((m + s d e0)^2 + 4 delta (n + |zeta|/(2eta) + s zeta/(2eta) + 1))
//     - omega (l + 1/2); positive square-root branch only.
double energy_level(const QuantumNumbers& qn, const ParticleParams& p,
                    const BackgroundParams& bg);

// Flat-limit specialization of the level formula with zeta_+ = l and
// zeta_- = l+1 substituted symbolically; used by the exact eta -> 1 checks.
double energy_level_minkowski(const QuantumNumbers& qn, const ParticleParams& p,
                              double omega);

// beta = 4 delta (n + |zeta|/(2 eta) + 1/2): the eigenvalue picked out by the
// terminating-series quantization of the radial equation.
double analytic_beta(int n, double zeta, double delta, double eta);

// E_NR = m + (2 delta / m)(n + |zeta|/(2eta) + s zeta/(2eta) + 1) + s d e0 - omega(l+1/2)
double nonrelativistic_energy(const QuantumNumbers& qn, const ParticleParams& p,
                              const BackgroundParams& bg);

// omega_c = 2 d e0 omega eta / m
double cyclotron_frequency(const ParticleParams& p, const BackgroundParams& bg);

struct WeakFieldCheck {
    double ratio = 0.0; // d e0 / (omega eta)
    bool pass = false;
};

WeakFieldCheck check_weak_field(const ParticleParams& p, const BackgroundParams& bg,
                                double threshold = 0.01);

struct SpectrumResult {
    QuantumNumbers qn;
    double zeta = 0.0;
    double delta = 0.0;
    double energy = 0.0;
    double beta = 0.0; // beta_parameter evaluated at energy
    double energy_nonrel = 0.0;
    double weak_field_ratio = 0.0;
};

// Level groups that coincide (1e-12 absolute) in the flat eta = 1 table, with
// the spread the same states acquire at the requested eta.
struct DegenerateGroup {
    std::vector<QuantumNumbers> members;
    double energy_flat = 0.0;            // common energy at eta = 1
    std::vector<double> energies_at_eta; // same states at the requested eta
    double splitting = 0.0;              // max - min of energies_at_eta
};

struct LandauTable {
    std::vector<SpectrumResult> levels; // sorted by (n, l, s)
    std::vector<DegenerateGroup> degeneracies;
};

LandauTable landau_table(const ParticleParams& p, const BackgroundParams& bg, int n_max,
                         int l_min, int l_max, bool both_s, Exec exec = Exec::openmp);

// Same table restricted to an explicit spin selection (+1, -1, or both).
LandauTable landau_table(const ParticleParams& p, const BackgroundParams& bg, int n_max,
                         int l_min, int l_max, const std::vector<int>& spins,
                         Exec exec = Exec::openmp);

} // namespace hmw
