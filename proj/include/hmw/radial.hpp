#pragma once

#include <vector>

#include "hmw/geometry.hpp"
#include "hmw/grid.hpp"
#include "hmw/spectrum.hpp"

namespace hmw {

// Closed-form bound-state radial profile, unnormalized:
//   xi_s(rho) = delta^{|zeta|/(2 eta)} e^{-delta rho^2 / 2} rho^{|zeta|/eta}
//               M(-n, |zeta|/eta + 1, delta rho^2)
double radial_eigenfunction(const QuantumNumbers& qn, const ParticleParams& p,
                            const BackgroundParams& bg, double rho);

// Companion profile with M(-n+1, |zeta|/eta + 2, delta rho^2) in place of the
// terminating factor; it carries the derivative of the first profile and
// feeds the spinor small components.
double radial_eigenfunction_shifted(const QuantumNumbers& qn, const ParticleParams& p,
                                    const BackgroundParams& bg, double rho);

struct WavefunctionTable {
    RadialGrid grid;
    std::vector<double> values;        // normalized xi_s at the interior nodes
    double normalization = 0.0;        // constant C with xi_norm = C * xi_raw
    double tail_mass = 0.0;            // fraction of the norm beyond rho_max = 1/(omega eta)
    bool tail_warning = false;         // tail_mass > 0.5
};

// Normalizes over the measure eta rho drho on (0, rho_inf) with composite
// Simpson quadrature (closed endpoints; the integrand vanishes at the axis).
// Requires delta * rho_inf^2 >= 30, otherwise throws std::invalid_argument
// (grid too short for the Gaussian tail). tail_mass is a diagnostic computed
// by quadrature over [rho_max, rho_inf]; it is reported, never asserted small.
WavefunctionTable normalize(const QuantumNumbers& qn, const ParticleParams& p,
                            const BackgroundParams& bg, const RadialGrid& grid);

} // namespace hmw
