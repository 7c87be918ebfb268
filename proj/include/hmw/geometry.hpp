#pragma once

#include <array>
#include <vector>

#include "hmw/grid.hpp"

namespace hmw {

// Rotating conical background: line element
//   ds^2 = -(1 - w^2 eta^2 rho^2) dt^2 + 2 w eta^2 rho^2 dphi dt
//          + drho^2 + eta^2 rho^2 dphi^2 + dz^2,
// with deficit parameter eta in (0, 1] (eta = 1 is the flat limit) and frame
// angular velocity omega >= 0, in units c = hbar = 1.
struct BackgroundParams {
    double eta = 1.0;
    double omega = 0.0;
};

// Throws std::invalid_argument naming the offending field. eta > 1 models a
// solid-state disclination and is rejected unless allow_disclination is set.
void validate(const BackgroundParams& bg, bool allow_disclination = false);

struct MetricComponents {
    double g_tt, g_tphi, g_rhorho, g_phiphi, g_zz; // all other components zero
};

// Orthonormal co-frame rows theta^a_mu (a = frame index, mu = t,rho,phi,z)
// and the inverse frame e^mu_a.
struct Tetrad {
    std::array<std::array<double, 4>, 4> comp{};    // comp[a][mu] = theta^a_mu
    std::array<std::array<double, 4>, 4> inverse{}; // inverse[mu][a] = e^mu_a
};

enum class Frame { local_rest, coordinate };

// Electric and magnetic 3-vectors in physical (orthonormal) cylindrical
// components (rho, phi, z), tagged with the frame they were produced in.
struct FieldTriple {
    std::array<double, 3> E{};
    std::array<double, 3> B{};
    Frame frame = Frame::local_rest;
};

MetricComponents metric_components(const BackgroundParams& bg, double rho);

Tetrad tetrad_at(const BackgroundParams& bg, double rho);

// First Cartan structure equation d theta^a + w^a_b ^ theta^b = 0 evaluated
// coefficient-by-coefficient for the hard-coded connection 1-form, whose only
// independent components here are w_t^12 and w_phi^12.
struct SpinConnection {
    double w_t_12;   // dt component of w^1_2
    double w_phi_12; // dphi component of w^1_2
};

SpinConnection background_connection(const BackgroundParams& bg); // (-omega*eta, -eta)

struct CartanReport {
    bool pass = false;
    double max_abs_residual = 0.0;
    // residual coefficient of each coordinate 2-form, per frame index a;
    // basis order: t^rho, t^phi, t^z, rho^phi, rho^z, phi^z
    std::array<std::array<double, 6>, 4> residuals{};
};

CartanReport cartan_check(const BackgroundParams& bg);
CartanReport cartan_check(const BackgroundParams& bg, const SpinConnection& conn);

// Antisymmetric contravariant field tensor in coordinate components,
// F^{mu nu} = e^mu_a e^nu_b F^{ab}, from a local-rest-frame field triple with
// F^{0i} = -E^i and F^{ij} = -eps^{ijk} B_k.
using FieldTensor = std::array<std::array<double, 4>, 4>;

FieldTensor transform_field_tensor(const Tetrad& tetrad, const FieldTriple& local);

// Physical-component fields read off a coordinate field tensor: the electric
// part comes from the t row, the magnetic part from the purely spatial block
// contracted with the spatial legs of the orthonormal triad.
FieldTriple project_physical(const Tetrad& tetrad, const FieldTensor& f);

// Fields seen in the rotating frame for an axial external field of strength
// e0: E = (0, 0, e0), B = (-(eta rho) omega e0, 0, 0).
FieldTriple induced_fields(const BackgroundParams& bg, double e0, double rho);

// Effective 4-potential coupling a z-aligned dipole of moment d and spin
// polarization s to the fields: A_t = s d E_z, spatial part s d (z_hat x B),
// physical components, order (A_t, A_rho, A_phi, A_z).
std::array<double, 4> effective_potential(int s, double d, const FieldTriple& fields);

struct EffectiveFieldCheck {
    double closed_form = 0.0;          // -2 omega eta e0
    std::vector<double> fd_curl;       // per interior grid node
    double max_abs_deviation = 0.0;    // max |fd_curl - closed_form|
};

// Uniform effective magnetic field -2 omega eta e0 together with a
// finite-difference evaluation of (1/rho) d/drho (rho (z_hat x B)_phi) on the
// supplied grid (central differences inside, one-sided second order at the
// two edge nodes).
EffectiveFieldCheck effective_magnetic_field(const BackgroundParams& bg, double e0,
                                             const RadialGrid& grid);

// 1/(omega eta); +infinity when omega = 0.
double physical_radius(const BackgroundParams& bg);

} // namespace hmw
