#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hmw {

// Uniform radial grid on (0, rho_inf) with N interior nodes, h = rho_inf/(N+1).
// Interior node i (0-based) sits at rho = (i+1)*h; the endpoints rho = 0 and
// rho = rho_inf are not stored but are used as closed quadrature endpoints.
struct RadialGrid {
    int n = 0;            // interior node count
    double rho_inf = 0.0; // outer edge of the computational domain
    double h = 0.0;       // uniform spacing, rho_inf/(n+1)

    RadialGrid() = default;
    RadialGrid(int n_interior, double rho_infinity)
        : n(n_interior), rho_inf(rho_infinity), h(rho_infinity / (n_interior + 1)) {
        if (n_interior < 100)
            throw std::invalid_argument("RadialGrid: interior node count must be >= 100");
        if (!(rho_infinity > 0.0))
            throw std::invalid_argument("RadialGrid: rho_inf must be positive");
    }

    double node(int i) const { return (i + 1) * h; } // interior node, 0-based
    double rho_min() const { return h; }

    std::vector<double> nodes() const {
        std::vector<double> r(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = node(i);
        return r;
    }
};

// Integral over [0, rho_inf] of a function sampled on the interior nodes,
// with explicitly supplied endpoint values. Composite Simpson on the closed
// node set; an odd panel count is finished with a single 3/8 rule so the
// whole quadrature stays O(h^4). Deterministic summation order.
double integrate_closed(const RadialGrid& grid, const std::vector<double>& interior,
                        double at_axis, double at_wall);

} // namespace hmw
