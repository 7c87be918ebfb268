#pragma once

#include <array>
#include <complex>
#include <vector>

#include "hmw/geometry.hpp"
#include "hmw/grid.hpp"
#include "hmw/parallel.hpp"
#include "hmw/radial.hpp"
#include "hmw/spectrum.hpp"

namespace hmw {

using cplx = std::complex<double>;
using Mat4 = std::array<std::array<cplx, 4>, 4>;
using Vec4 = std::array<cplx, 4>;

// Fixed Dirac-representation matrices. The geometry carries signature
// (-,+,+,+); the algebra below uses the conventional Dirac-matrix metric
// eta^{ab} = diag(+1,-1,-1,-1) so that (gamma^0)^2 = +1. All entries are
// 0, +-1, +-i, so the anticommutation relations hold exactly.
struct GammaConstants {
    Mat4 gamma0, gamma1, gamma2, gamma3, gamma5;
    Mat4 sigma1, sigma2, sigma3; // block-diagonal Pauli
    Mat4 alpha1, alpha2, alpha3; // alpha^i = gamma^0 gamma^i
    Mat4 beta;                   // = gamma^0
    static const GammaConstants& get();
};

Mat4 mat_mul(const Mat4& a, const Mat4& b);
Mat4 mat_add(const Mat4& a, const Mat4& b);
Vec4 mat_vec(const Mat4& m, const Vec4& v);

// Positive-energy bound-state spinor sampled on the interior nodes. The
// azimuthal, longitudinal and time dependence e^{i[(l+1/2)phi + k z - E t]}
// is carried analytically; the table stores the radial four-component
// profile. Component sparsity: s=+1 states live in entries 0 and 3,
// s=-1 states in entries 1 and 2.
struct SpinorTable {
    RadialGrid grid;
    std::vector<Vec4> psi; // one Vec4 per interior node
    QuantumNumbers qn;
    double energy = 0.0;
    double prefactor = 0.0; // normalization constant C (real, positive)
};

// Assembles the closed-form spinor: large component from the radial
// eigenfunction, small component from
//   (i/D_s) { [2 delta rho - (|zeta|-s zeta)/(eta rho)] R0
//             + (2 n delta rho / (|zeta|/eta + 1)) R1 },
// D_s = E + m + omega(l+1/2) + s d e0, R1 the shifted radial profile.
// C is fixed by unit norm with a real positive large component at the first
// node. Throws std::domain_error when the denominator D_s <= 0.
SpinorTable build_spinor(const QuantumNumbers& qn, const ParticleParams& p,
                         const BackgroundParams& bg, const RadialGrid& grid,
                         Exec exec = Exec::openmp);

// Same assembly with the energy supplied explicitly instead of taken from
// the level formula (the degenerate-denominator guard lives here).
SpinorTable build_spinor_with_energy(const QuantumNumbers& qn, const ParticleParams& p,
                                     const BackgroundParams& bg, const RadialGrid& grid,
                                     double energy, Exec exec = Exec::openmp);

// L2 norm (measure eta rho drho) of H psi - E psi over the interior nodes
// excluding two-node margins at both ends. Radial derivatives by central
// differences; t, phi, z derivatives analytic (-iE, i(l+1/2), 0).
double dirac_residual(const SpinorTable& table, const ParticleParams& p,
                      const BackgroundParams& bg, Exec exec = Exec::openmp);

// Direct bilinear current J^mu = psi-bar gamma^mu psi with
// gamma^mu = e^mu_a gamma^a contracted at every node:
//   J^t = psi+ psi, J^rho = psi+ alpha1 psi,
//   J^phi = -omega psi+ psi + psi+ alpha2 psi/(eta rho), J^z = psi+ alpha3 psi.
// Components are real to rounding; stored per node in order (t, rho, phi, z).
std::vector<std::array<double, 4>> bilinear_current(const SpinorTable& table,
                                                    const BackgroundParams& bg,
                                                    Exec exec = Exec::openmp);

struct GordonCurrents {
    RadialGrid grid;
    int margin = 2; // node rows [margin, n-margin) carry valid derivatives
    std::vector<std::array<double, 4>> total;      // assembled J^mu
    std::vector<std::array<double, 4>> convection; // gradient/eigenvalue part
    std::vector<std::array<double, 4>> spin;       // total - convection
    std::vector<std::array<double, 3>> magnetization; // M, physical components
    std::vector<std::array<double, 3>> polarization;  // P, physical components
};

// Split of the current into convection plus magnetization/polarization
// pieces for a stationary eigenstate, assembled per node with analytic t,
// phi, z derivatives and central-difference rho derivatives:
//   J^t    = (E + omega(l+1/2)) Q / m + div P - 2 d e0 M3
//   J^rho  = Im(psi-bar d_rho psi)/m + (d e0/m) Im(psi+ gamma2 psi)
//   J^phi  = [-omega E + (-omega^2 + 1/(eta^2 rho^2))(l+1/2)] Q / m
//            - omega div P - (1/(eta rho^2)) d_rho(rho M3)
//            + 2 omega d e0 M3 + (2 d e0/(eta rho)) P1 + (omega d e0/m) A3
//   J^z    = (1/rho) d_rho(rho M2) + (d B_rho/m) psi+ sigma2 psi
// with Q = psi-bar psi, P1 = (i/2m) psi+ gamma1 psi, M3 = (1/2m) psi+ gamma0
// sigma3 psi, A3 = psi+ sigma3 psi, div P = (1/rho) d_rho(rho P1).
// The first and last `margin` rows are zero-filled (no valid derivative).
GordonCurrents gordon_currents(const SpinorTable& table, const ParticleParams& p,
                               const BackgroundParams& bg, Exec exec = Exec::openmp);

// Largest pointwise |gordon - bilinear| over the valid rows, scaled per
// component by the largest |bilinear| of that component (absolute when a
// component vanishes identically).
double gordon_max_deviation(const GordonCurrents& g,
                            const std::vector<std::array<double, 4>>& bilinear);

// Integral of the bilinear J^t over the spatial measure eta rho drho.
double charge(const SpinorTable& table, const BackgroundParams& bg,
              Exec exec = Exec::openmp);

} // namespace hmw
