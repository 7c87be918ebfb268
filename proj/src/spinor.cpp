#include "hmw/spinor.hpp"

#include <cmath>
#include <stdexcept>

namespace hmw {

namespace {

using Mat2 = std::array<std::array<cplx, 2>, 2>;

constexpr cplx kI{0.0, 1.0};

Mat4 block4(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
    Mat4 m{};
    for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col) {
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] =
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col + 2)] =
                b[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            m[static_cast<std::size_t>(r + 2)][static_cast<std::size_t>(col)] =
                c[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            m[static_cast<std::size_t>(r + 2)][static_cast<std::size_t>(col + 2)] =
                d[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        }
    return m;
}

Mat2 neg(const Mat2& a) {
    Mat2 m{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                -a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

GammaConstants make_constants() {
    const Mat2 zero{{{cplx{}, cplx{}}, {cplx{}, cplx{}}}};
    const Mat2 eye{{{cplx{1.0}, cplx{}}, {cplx{}, cplx{1.0}}}};
    const Mat2 s1{{{cplx{}, cplx{1.0}}, {cplx{1.0}, cplx{}}}};
    const Mat2 s2{{{cplx{}, -kI}, {kI, cplx{}}}};
    const Mat2 s3{{{cplx{1.0}, cplx{}}, {cplx{}, cplx{-1.0}}}};

    GammaConstants g;
    g.gamma0 = block4(eye, zero, zero, neg(eye));
    g.gamma1 = block4(zero, s1, neg(s1), zero);
    g.gamma2 = block4(zero, s2, neg(s2), zero);
    g.gamma3 = block4(zero, s3, neg(s3), zero);
    g.gamma5 = block4(zero, eye, eye, zero);
    g.sigma1 = block4(s1, zero, zero, s1);
    g.sigma2 = block4(s2, zero, zero, s2);
    g.sigma3 = block4(s3, zero, zero, s3);
    g.alpha1 = block4(zero, s1, s1, zero);
    g.alpha2 = block4(zero, s2, s2, zero);
    g.alpha3 = block4(zero, s3, s3, zero);
    g.beta = g.gamma0;
    return g;
}

cplx bilinear(const Vec4& psi, const Mat4& m) {
    const Vec4 mv = mat_vec(m, psi);
    cplx acc{};
    for (int i = 0; i < 4; ++i)
        acc += std::conj(psi[static_cast<std::size_t>(i)]) * mv[static_cast<std::size_t>(i)];
    return acc;
}

cplx dot_conj(const Vec4& a, const Vec4& b) {
    cplx acc{};
    for (int i = 0; i < 4; ++i)
        acc += std::conj(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(i)];
    return acc;
}

} // namespace

const GammaConstants& GammaConstants::get() {
    static const GammaConstants g = make_constants();
    return g;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
    Mat4 m{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx acc{};
            for (int k = 0; k < 4; ++k)
                acc += a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] *
                       b[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = acc;
        }
    return m;
}

Mat4 mat_add(const Mat4& a, const Mat4& b) {
    Mat4 m{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +
                b[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

Vec4 mat_vec(const Mat4& m, const Vec4& v) {
    Vec4 out{};
    for (int r = 0; r < 4; ++r) {
        cplx acc{};
        for (int c = 0; c < 4; ++c)
            acc += m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                   v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

SpinorTable build_spinor_with_energy(const QuantumNumbers& qn, const ParticleParams& p,
                                     const BackgroundParams& bg, const RadialGrid& grid,
                                     double energy, Exec exec) {
    validate(qn);
    validate(p);
    const double zeta = effective_angular_momentum(qn.l, qn.s, bg.eta);
    const double delta = coupling_delta(p, bg);
    const double a = std::abs(zeta) / bg.eta;
    const double j = static_cast<double>(qn.l) + 0.5;
    const double denom =
        energy + p.m + bg.omega * j + static_cast<double>(qn.s) * p.d * p.e0;
    if (!(denom > 0.0))
        throw std::domain_error(
            "energy: small-component denominator E + m + omega(l+1/2) + s d e0 "
            "must be positive");
    // coefficient of the 1/rho part of the small component: (|zeta| - s zeta)/eta
    const double inv_coeff =
        (std::abs(zeta) - static_cast<double>(qn.s) * zeta) / bg.eta;
    const double shifted_coeff = 2.0 * static_cast<double>(qn.n) * delta / (a + 1.0);

    SpinorTable table;
    table.grid = grid;
    table.qn = qn;
    table.energy = energy;
    table.psi.assign(static_cast<std::size_t>(grid.n), Vec4{});

    auto raw_at = [&](double rho, double& large, double& small) {
        const double r0 = radial_eigenfunction(qn, p, bg, rho);
        const double r1 = radial_eigenfunction_shifted(qn, p, bg, rho);
        large = r0;
        small = ((2.0 * delta * rho - inv_coeff / rho) * r0 + shifted_coeff * rho * r1) /
                denom;
    };
    auto fill = [&](int i) {
        double large, small;
        raw_at(grid.node(i), large, small);
        Vec4 v{};
        if (qn.s > 0) {
            v[0] = cplx{large, 0.0};
            v[3] = kI * small;
        } else {
            v[1] = cplx{large, 0.0};
            v[2] = kI * small;
        }
        table.psi[static_cast<std::size_t>(i)] = v;
    };
    const int n = grid.n;
    if (exec == Exec::openmp) {
#pragma omp parallel for
        for (int i = 0; i < n; ++i) fill(i);
    } else {
        for (int i = 0; i < n; ++i) fill(i);
    }

    // unit norm over eta rho drho; the density vanishes at the axis
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Vec4& v = table.psi[static_cast<std::size_t>(i)];
        double dens = 0.0;
        for (int c = 0; c < 4; ++c) dens += std::norm(v[static_cast<std::size_t>(c)]);
        w[static_cast<std::size_t>(i)] = bg.eta * grid.node(i) * dens;
    }
    double wall_large, wall_small;
    raw_at(grid.rho_inf, wall_large, wall_small);
    const double at_wall =
        bg.eta * grid.rho_inf * (wall_large * wall_large + wall_small * wall_small);
    const double raw_norm = integrate_closed(grid, w, 0.0, at_wall);
    if (!(raw_norm > 0.0))
        throw std::runtime_error("build_spinor: raw norm integral is not positive");
    table.prefactor = 1.0 / std::sqrt(raw_norm);
    for (auto& v : table.psi)
        for (auto& c : v) c *= table.prefactor;
    return table;
}

SpinorTable build_spinor(const QuantumNumbers& qn, const ParticleParams& p,
                         const BackgroundParams& bg, const RadialGrid& grid, Exec exec) {
    return build_spinor_with_energy(qn, p, bg, grid, energy_level(qn, p, bg), exec);
}

double dirac_residual(const SpinorTable& table, const ParticleParams& p,
                      const BackgroundParams& bg, Exec exec) {
    const GammaConstants& g = GammaConstants::get();
    const Mat4 beta_alpha1 = mat_mul(g.beta, g.alpha1);
    const QuantumNumbers& qn = table.qn;
    const double j = static_cast<double>(qn.l) + 0.5;
    const int n = table.grid.n;
    const double h = table.grid.h;
    const int margin = 2;
    if (n < 2 * margin + 1) throw std::invalid_argument("grid: too few nodes");

    std::vector<double> contrib(static_cast<std::size_t>(n), 0.0);
    auto row = [&](int i) {
        const double rho = table.grid.node(i);
        const Vec4& psi = table.psi[static_cast<std::size_t>(i)];
        const Vec4& psi_p = table.psi[static_cast<std::size_t>(i + 1)];
        const Vec4& psi_m = table.psi[static_cast<std::size_t>(i - 1)];
        Vec4 dpsi{};
        for (int c = 0; c < 4; ++c)
            dpsi[static_cast<std::size_t>(c)] =
                (psi_p[static_cast<std::size_t>(c)] - psi_m[static_cast<std::size_t>(c)]) /
                (2.0 * h);
        // radial covariant combination (d_rho + 1/(2 rho)) psi
        Vec4 rad{};
        for (int c = 0; c < 4; ++c)
            rad[static_cast<std::size_t>(c)] = dpsi[static_cast<std::size_t>(c)] +
                                               psi[static_cast<std::size_t>(c)] /
                                                   (2.0 * rho);
        const Vec4 a1_rad = mat_vec(g.alpha1, rad);
        const Vec4 a2_psi = mat_vec(g.alpha2, psi);
        const Vec4 b_psi = mat_vec(g.beta, psi);
        const Vec4 ba1_psi = mat_vec(beta_alpha1, psi);
        const Vec4 s3_psi = mat_vec(g.sigma3, psi);
        const double b_rho = induced_fields(bg, p.e0, rho).B[0];
        double acc = 0.0;
        for (int c = 0; c < 4; ++c) {
            const std::size_t k = static_cast<std::size_t>(c);
            const cplx h_psi = p.m * b_psi[k] - bg.omega * j * psi[k] - kI * a1_rad[k] +
                               (j / (bg.eta * rho)) * a2_psi[k] +
                               kI * p.d * b_rho * ba1_psi[k] + p.d * p.e0 * s3_psi[k];
            acc += std::norm(h_psi - table.energy * psi[k]);
        }
        contrib[static_cast<std::size_t>(i)] = acc * bg.eta * rho * h;
    };
    if (exec == Exec::openmp) {
#pragma omp parallel for
        for (int i = margin; i < n - margin; ++i) row(i);
    } else {
        for (int i = margin; i < n - margin; ++i) row(i);
    }
    double total = 0.0;
    for (int i = margin; i < n - margin; ++i)
        total += contrib[static_cast<std::size_t>(i)];
    return std::sqrt(total);
}

std::vector<std::array<double, 4>> bilinear_current(const SpinorTable& table,
                                                    const BackgroundParams& bg,
                                                    Exec exec) {
    const GammaConstants& g = GammaConstants::get();
    const int n = table.grid.n;
    std::vector<std::array<double, 4>> out(static_cast<std::size_t>(n));
    auto row = [&](int i) {
        const double rho = table.grid.node(i);
        const Vec4& psi = table.psi[static_cast<std::size_t>(i)];
        const double jt = dot_conj(psi, psi).real();
        const double jrho = bilinear(psi, g.alpha1).real();
        const double jphi_local = bilinear(psi, g.alpha2).real();
        const double jz = bilinear(psi, g.alpha3).real();
        out[static_cast<std::size_t>(i)] = {jt, jrho,
                                            -bg.omega * jt + jphi_local / (bg.eta * rho),
                                            jz};
    };
    if (exec == Exec::openmp) {
#pragma omp parallel for
        for (int i = 0; i < n; ++i) row(i);
    } else {
        for (int i = 0; i < n; ++i) row(i);
    }
    return out;
}

GordonCurrents gordon_currents(const SpinorTable& table, const ParticleParams& p,
                               const BackgroundParams& bg, Exec exec) {
    const GammaConstants& g = GammaConstants::get();
    const Mat4 g0s2 = mat_mul(g.gamma0, g.sigma2);
    const Mat4 g0s3 = mat_mul(g.gamma0, g.sigma3);
    const Mat4 g0s1 = mat_mul(g.gamma0, g.sigma1);
    const QuantumNumbers& qn = table.qn;
    const double j = static_cast<double>(qn.l) + 0.5;
    const double m = p.m;
    const double de0 = p.d * p.e0;
    const double energy = table.energy;
    const double shifted_energy = energy + bg.omega * j;
    const int n = table.grid.n;
    const double h = table.grid.h;

    GordonCurrents out;
    out.grid = table.grid;
    out.margin = 2;
    out.total.assign(static_cast<std::size_t>(n), {0.0, 0.0, 0.0, 0.0});
    out.convection.assign(static_cast<std::size_t>(n), {0.0, 0.0, 0.0, 0.0});
    out.spin.assign(static_cast<std::size_t>(n), {0.0, 0.0, 0.0, 0.0});
    out.magnetization.assign(static_cast<std::size_t>(n), {0.0, 0.0, 0.0});
    out.polarization.assign(static_cast<std::size_t>(n), {0.0, 0.0, 0.0});

    // pass 1: pointwise bilinears
    std::vector<double> q(static_cast<std::size_t>(n));
    std::vector<double> a3(static_cast<std::size_t>(n));
    std::vector<double> s2(static_cast<std::size_t>(n));
    std::vector<double> g2(static_cast<std::size_t>(n));
    auto pointwise = [&](int i) {
        const std::size_t k = static_cast<std::size_t>(i);
        const Vec4& psi = table.psi[k];
        q[k] = bilinear(psi, g.gamma0).real();
        a3[k] = bilinear(psi, g.sigma3).real();
        s2[k] = bilinear(psi, g.sigma2).real();
        g2[k] = bilinear(psi, g.gamma2).imag();
        out.polarization[k] = {-bilinear(psi, g.gamma1).imag() / (2.0 * m),
                               -bilinear(psi, g.gamma2).imag() / (2.0 * m),
                               -bilinear(psi, g.gamma3).imag() / (2.0 * m)};
        out.magnetization[k] = {bilinear(psi, g0s1).real() / (2.0 * m),
                                bilinear(psi, g0s2).real() / (2.0 * m),
                                bilinear(psi, g0s3).real() / (2.0 * m)};
    };
    if (exec == Exec::openmp) {
#pragma omp parallel for
        for (int i = 0; i < n; ++i) pointwise(i);
    } else {
        for (int i = 0; i < n; ++i) pointwise(i);
    }

    // pass 2: radial derivatives and assembly on the interior core
    auto assemble = [&](int i) {
        const std::size_t k = static_cast<std::size_t>(i);
        const double rho = table.grid.node(i);
        const double rho_p = table.grid.node(i + 1);
        const double rho_m = table.grid.node(i - 1);
        const Vec4& psi = table.psi[k];
        const Vec4& psi_p = table.psi[k + 1];
        const Vec4& psi_m = table.psi[k - 1];

        const double p1 = out.polarization[k][0];
        const double p1_p = out.polarization[k + 1][0];
        const double p1_m = out.polarization[k - 1][0];
        const double m3 = out.magnetization[k][2];
        const double m3_p = out.magnetization[k + 1][2];
        const double m3_m = out.magnetization[k - 1][2];
        const double m2_p = out.magnetization[k + 1][1];
        const double m2_m = out.magnetization[k - 1][1];

        const double div_p = (rho_p * p1_p - rho_m * p1_m) / (2.0 * h) / rho;
        const double dm3 = (rho_p * m3_p - rho_m * m3_m) / (2.0 * h) / (bg.eta * rho * rho);
        const double dm2 = (rho_p * m2_p - rho_m * m2_m) / (2.0 * h) / rho;

        // Im(psi-bar d_rho psi)/m with central-difference derivative
        Vec4 dpsi{};
        for (int c = 0; c < 4; ++c)
            dpsi[static_cast<std::size_t>(c)] =
                (psi_p[static_cast<std::size_t>(c)] - psi_m[static_cast<std::size_t>(c)]) /
                (2.0 * h);
        const cplx bar_dpsi = dot_conj(mat_vec(g.gamma0, psi), dpsi);
        const double conv_rho = bar_dpsi.imag() / m;

        const double conv_t = shifted_energy * q[k] / m;
        const double conv_phi =
            (-bg.omega * energy +
             (-bg.omega * bg.omega + 1.0 / (bg.eta * bg.eta * rho * rho)) * j) *
            q[k] / m;

        const double b_rho = induced_fields(bg, p.e0, rho).B[0];
        const double jt = conv_t + div_p - 2.0 * de0 * m3;
        const double jrho = conv_rho + (de0 / m) * g2[k];
        const double jphi = conv_phi - bg.omega * div_p - dm3 +
                            2.0 * bg.omega * de0 * m3 +
                            (2.0 * de0 / (bg.eta * rho)) * p1 +
                            (bg.omega * de0 / m) * a3[k];
        const double jz = dm2 + (p.d * b_rho / m) * s2[k];

        out.total[k] = {jt, jrho, jphi, jz};
        out.convection[k] = {conv_t, conv_rho, conv_phi, 0.0};
        out.spin[k] = {jt - conv_t, jrho - conv_rho, jphi - conv_phi, jz};
    };
    const int margin = out.margin;
    if (n < 2 * margin + 1) throw std::invalid_argument("grid: too few nodes");
    if (exec == Exec::openmp) {
#pragma omp parallel for
        for (int i = margin; i < n - margin; ++i) assemble(i);
    } else {
        for (int i = margin; i < n - margin; ++i) assemble(i);
    }
    return out;
}

double gordon_max_deviation(const GordonCurrents& g,
                            const std::vector<std::array<double, 4>>& bilinear) {
    const int n = g.grid.n;
    if (static_cast<int>(bilinear.size()) != n || static_cast<int>(g.total.size()) != n)
        throw std::invalid_argument("bilinear: row count must match the grid");
    double worst = 0.0;
    for (int c = 0; c < 4; ++c) {
        double scale = 0.0;
        double dev = 0.0;
        for (int i = g.margin; i < n - g.margin; ++i) {
            const std::size_t k = static_cast<std::size_t>(i);
            const std::size_t cc = static_cast<std::size_t>(c);
            scale = std::max(scale, std::fabs(bilinear[k][cc]));
            dev = std::max(dev, std::fabs(g.total[k][cc] - bilinear[k][cc]));
        }
        worst = std::max(worst, scale > 0.0 ? dev / scale : dev);
    }
    return worst;
}

double charge(const SpinorTable& table, const BackgroundParams& bg, Exec exec) {
    const int n = table.grid.n;
    std::vector<double> w(static_cast<std::size_t>(n));
    auto fill = [&](int i) {
        const Vec4& psi = table.psi[static_cast<std::size_t>(i)];
        w[static_cast<std::size_t>(i)] =
            bg.eta * table.grid.node(i) * dot_conj(psi, psi).real();
    };
    if (exec == Exec::openmp) {
#pragma omp parallel for
        for (int i = 0; i < n; ++i) fill(i);
    } else {
        for (int i = 0; i < n; ++i) fill(i);
    }
    return integrate_closed(table.grid, w, 0.0, 0.0);
}

} // namespace hmw
