#include "hmw/radial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hmw/kummer.hpp"

namespace hmw {

namespace {

struct ProfileParts {
    double a;       // |zeta| / eta
    double delta;   // d e0 omega eta
    double prefactor; // delta^{|zeta|/(2 eta)}
};

ProfileParts profile_parts(const QuantumNumbers& qn, const ParticleParams& p,
                           const BackgroundParams& bg) {
    validate(qn);
    validate(p);
    const double zeta = effective_angular_momentum(qn.l, qn.s, bg.eta);
    ProfileParts parts;
    parts.a = std::abs(zeta) / bg.eta;
    parts.delta = coupling_delta(p, bg);
    parts.prefactor = std::pow(parts.delta, std::abs(zeta) / (2.0 * bg.eta));
    return parts;
}

} // namespace

double radial_eigenfunction(const QuantumNumbers& qn, const ParticleParams& p,
                            const BackgroundParams& bg, double rho) {
    if (rho < 0.0) throw std::domain_error("rho: must be >= 0");
    const ProfileParts parts = profile_parts(qn, p, bg);
    const double x = parts.delta * rho * rho;
    // pow(0, 0) = 1 and pow(0, positive) = 0 give the correct axis limit for
    // both the zeta = 0 and zeta != 0 branches.
    return parts.prefactor * std::exp(-0.5 * x) * std::pow(rho, parts.a) *
           kummer_m({-static_cast<double>(qn.n), parts.a + 1.0, x});
}

double radial_eigenfunction_shifted(const QuantumNumbers& qn, const ParticleParams& p,
                                    const BackgroundParams& bg, double rho) {
    if (rho < 0.0) throw std::domain_error("rho: must be >= 0");
    const ProfileParts parts = profile_parts(qn, p, bg);
    const double x = parts.delta * rho * rho;
    return parts.prefactor * std::exp(-0.5 * x) * std::pow(rho, parts.a) *
           kummer_m({-static_cast<double>(qn.n) + 1.0, parts.a + 2.0, x});
}

WavefunctionTable normalize(const QuantumNumbers& qn, const ParticleParams& p,
                            const BackgroundParams& bg, const RadialGrid& grid) {
    validate(qn);
    validate(p);
    const double delta = coupling_delta(p, bg);
    const double sigma = delta * grid.rho_inf * grid.rho_inf;
    // tiny relative slack so a rho_inf derived from sqrt(30/delta) is not
    // rejected by its own round-trip rounding
    if (!(sigma >= 30.0 * (1.0 - 1e-12)))
        throw std::invalid_argument(
            "rho_inf: delta * rho_inf^2 = " + std::to_string(sigma) +
            " < 30; domain too short for the Gaussian tail");

    WavefunctionTable table{grid, {}, 0.0, 0.0, false};
    const int n = grid.n;
    table.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        table.values[static_cast<std::size_t>(i)] =
            radial_eigenfunction(qn, p, bg, grid.node(i));

    // norm over the measure eta rho drho; integrand vanishes at the axis
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double v = table.values[static_cast<std::size_t>(i)];
        w[static_cast<std::size_t>(i)] = bg.eta * grid.node(i) * v * v;
    }
    const double xi_wall = radial_eigenfunction(qn, p, bg, grid.rho_inf);
    const double at_wall = bg.eta * grid.rho_inf * xi_wall * xi_wall;
    const double raw_norm = integrate_closed(grid, w, 0.0, at_wall);
    if (!(raw_norm > 0.0))
        throw std::runtime_error("normalize: raw norm integral is not positive");
    table.normalization = 1.0 / std::sqrt(raw_norm);
    for (double& v : table.values) v *= table.normalization;

    // diagnostic: probability mass beyond the causal radius rho_max, by
    // trapezoid on the normalized density (closed-form value at rho_max
    // itself, grid values beyond); reported, never asserted small
    const double rho_max = physical_radius(bg);
    if (rho_max < grid.rho_inf) {
        auto density = [&](double rho, double xi) { return bg.eta * rho * xi * xi; };
        const double c = table.normalization;
        double tail = 0.0;
        // first interior node strictly beyond rho_max
        int first = static_cast<int>(std::ceil(rho_max / grid.h - 1.0 + 1e-12));
        if (first < 0) first = 0;
        while (first < n && grid.node(first) <= rho_max) ++first;
        const double f_max =
            density(rho_max, c * radial_eigenfunction(qn, p, bg, rho_max));
        if (first >= n) {
            // rho_max falls within the last open interval before the wall
            tail = 0.5 * (grid.rho_inf - rho_max) * (f_max + at_wall * c * c);
        } else {
            double prev_rho = rho_max;
            double prev_f = f_max;
            for (int i = first; i < n; ++i) {
                const double rho = grid.node(i);
                const double f =
                    density(rho, table.values[static_cast<std::size_t>(i)]);
                tail += 0.5 * (rho - prev_rho) * (prev_f + f);
                prev_rho = rho;
                prev_f = f;
            }
            tail += 0.5 * (grid.rho_inf - prev_rho) * (prev_f + at_wall * c * c);
        }
        table.tail_mass = tail;
        table.tail_warning = tail > 0.5;
    }
    return table;
}

} // namespace hmw
