#pragma once

#include <vector>

#include "hmw/grid.hpp"
#include "hmw/parallel.hpp"
#include "hmw/spectrum.hpp"

namespace hmw {

// Symmetric tridiagonal discretization of the Liouville-transformed radial
// problem: with u = xi sqrt(rho),
//   -u'' + [ (zeta^2/eta^2 - 1/4)/rho^2 + delta^2 rho^2 ] u = beta u
// on (0, rho_inf) with Dirichlet ends.
struct TridiagonalOperator {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal; // size N-1, all -1/h^2
    double h = 0.0;
};

// Central differences on the grid. The inverse-square coefficient uses the
// node-indexed form c_i/rho_i^2 with
//   c_i = i^2 [ (1 - 1/i)^p + (1 + 1/i)^p - 2 ],  p = |zeta|/eta + 1/2,
// which reproduces zeta^2/eta^2 - 1/4 + O(1/i^2) away from the axis and is
// exact on the indicial behaviour u ~ rho^p, keeping the scheme uniformly
// second order even for the mildly singular cases |zeta|/eta < 1.
TridiagonalOperator discretize(double zeta, double delta, double eta,
                               const RadialGrid& grid);

// Plain stencil coefficient for reference: zeta^2/eta^2 - 1/4 at every node.
TridiagonalOperator discretize_plain(double zeta, double delta, double eta,
                                     const RadialGrid& grid);

// The count smallest eigenvalues by Sturm-sequence bisection to an absolute
// bracket width <= 1e-10; deterministic, strictly increasing.
std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int count);

// Number of eigenvalues strictly below lambda (LDL^T sign count).
int sturm_count(const TridiagonalOperator& op, double lambda);

struct EigenReport {
    int n = 0;
    int l = 0;
    int s = +1;
    double eta = 0.0;
    double delta = 0.0;
    double beta_analytic = 0.0;
    double beta_numeric = 0.0;
    double rel_error = 0.0; // |num - ana| / max(|ana|, 1e-300)
    int grid_n = 0;
    double rho_inf = 0.0;
    bool pass = true;
};

// Compares the finite-difference eigenvalues against the closed-form beta for
// every entry of qn_set, flagging entries whose relative error exceeds tol.
// Independent radial problems are deduplicated and may run in parallel;
// reports come back in qn_set order.
std::vector<EigenReport> verify_spectrum(const ParticleParams& p, const BackgroundParams& bg,
                                         const std::vector<QuantumNumbers>& qn_set, double tol,
                                         const RadialGrid& grid, Exec exec = Exec::openmp);

// Domain edge sized so the wall sits deep in the Gaussian tail of every state
// requested: dimensionless delta*rho_inf^2 = max(sigma_floor, beta_max/delta + 35)
// where beta_max is the largest analytic eigenvalue in the set. Returns the
// resulting rho_inf for the given delta.
double oracle_domain(double sigma_floor, double delta, double beta_max);

} // namespace hmw
