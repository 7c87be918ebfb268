#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hmw/spinor.hpp"

using namespace hmw;

namespace {

bool mats_equal(const Mat4& a, const Mat4& b) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                return false;
    return true;
}

Mat4 scaled_identity(double c) {
    Mat4 m{};
    for (int i = 0; i < 4; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = c;
    return m;
}

Mat4 anticommutator(const Mat4& a, const Mat4& b) {
    return mat_add(mat_mul(a, b), mat_mul(b, a));
}

// reference bound state reused across the numerical checks
const QuantumNumbers kQn{1, 2, +1, 0.0};
const ParticleParams kParticle{1.0, 0.01, 1.0};
const BackgroundParams kBg{0.5, 1.0}; // coupling 0.005

RadialGrid test_grid(int n) { return RadialGrid(n, std::sqrt(36.0 / 0.005)); }

} // namespace

TEST_CASE("gamma matrices satisfy the Clifford algebra exactly") {
    const GammaConstants& g = GammaConstants::get();
    const Mat4 gam[4] = {g.gamma0, g.gamma1, g.gamma2, g.gamma3};
    const double metric[4] = {1.0, -1.0, -1.0, -1.0};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const Mat4 expect = scaled_identity(a == b ? 2.0 * metric[a] : 0.0);
            CHECK(mats_equal(anticommutator(gam[a], gam[b]), expect));
        }
    // chirality matrix: squares to one, anticommutes with every gamma
    CHECK(mats_equal(mat_mul(g.gamma5, g.gamma5), scaled_identity(1.0)));
    for (const Mat4& m : gam)
        CHECK(mats_equal(anticommutator(g.gamma5, m), scaled_identity(0.0)));
}

TEST_CASE("derived matrices are consistent with their definitions") {
    const GammaConstants& g = GammaConstants::get();
    CHECK(mats_equal(g.beta, g.gamma0));
    CHECK(mats_equal(g.alpha1, mat_mul(g.gamma0, g.gamma1)));
    CHECK(mats_equal(g.alpha2, mat_mul(g.gamma0, g.gamma2)));
    CHECK(mats_equal(g.alpha3, mat_mul(g.gamma0, g.gamma3)));
    const Mat4 sig[3] = {g.sigma1, g.sigma2, g.sigma3};
    const Mat4 alp[3] = {g.alpha1, g.alpha2, g.alpha3};
    for (int i = 0; i < 3; ++i) {
        CHECK(mats_equal(mat_mul(sig[i], sig[i]), scaled_identity(1.0)));
        CHECK(mats_equal(mat_mul(alp[i], alp[i]), scaled_identity(1.0)));
        // hermiticity: all entries are 0, +-1, +-i, so compare exactly
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                CHECK(alp[i][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ==
                      std::conj(alp[i][static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]));
                CHECK(sig[i][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ==
                      std::conj(sig[i][static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]));
            }
    }
}

TEST_CASE("spinor sparsity follows the spin label") {
    const RadialGrid grid = test_grid(300);
    const SpinorTable up = build_spinor(kQn, kParticle, kBg, grid);
    CHECK(up.prefactor > 0.0);
    CHECK(up.psi.size() == static_cast<std::size_t>(grid.n));
    for (const Vec4& v : up.psi) {
        CHECK(v[1] == cplx(0.0, 0.0));
        CHECK(v[2] == cplx(0.0, 0.0));
        CHECK(v[0].imag() == 0.0); // large component real
        CHECK(v[3].real() == 0.0); // small component purely imaginary
    }
    CHECK(up.psi[0][0].real() > 0.0);
    const SpinorTable down =
        build_spinor({1, 2, -1, 0.0}, kParticle, kBg, grid);
    for (const Vec4& v : down.psi) {
        CHECK(v[0] == cplx(0.0, 0.0));
        CHECK(v[3] == cplx(0.0, 0.0));
        CHECK(v[1].imag() == 0.0);
        CHECK(v[2].real() == 0.0);
    }
}

TEST_CASE("large component is the scaled radial profile") {
    const RadialGrid grid = test_grid(300);
    const SpinorTable t = build_spinor(kQn, kParticle, kBg, grid);
    for (int i : {0, 150, 299})
        CHECK(t.psi[static_cast<std::size_t>(i)][0].real() ==
              doctest::Approx(t.prefactor * radial_eigenfunction(kQn, kParticle, kBg,
                                                                 grid.node(i)))
                  .epsilon(1e-14));
}

TEST_CASE("state is normalized to unit charge") {
    const SpinorTable t = build_spinor(kQn, kParticle, kBg, test_grid(2000));
    CHECK(charge(t, kBg) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("closed-form state solves the discrete eigenproblem") {
    const SpinorTable t = build_spinor(kQn, kParticle, kBg, test_grid(2000));
    const double resid = dirac_residual(t, kParticle, kBg);
    CHECK(resid < 1e-4);
    // a detuned energy is rejected by orders of magnitude
    const SpinorTable wrong = build_spinor_with_energy(kQn, kParticle, kBg,
                                                       test_grid(2000), t.energy + 0.01);
    CHECK(dirac_residual(wrong, kParticle, kBg) > 100.0 * resid);
    CHECK(dirac_residual(wrong, kParticle, kBg) > 1e-3);
}

TEST_CASE("nonpositive small-component denominator is rejected") {
    CHECK_THROWS_AS(build_spinor_with_energy({0, 0, +1, 0.0}, kParticle, kBg,
                                             test_grid(300), -3.0),
                    std::domain_error);
}

TEST_CASE("split current reproduces the direct bilinear") {
    const SpinorTable t = build_spinor(kQn, kParticle, kBg, test_grid(2000));
    const GordonCurrents g = gordon_currents(t, kParticle, kBg);
    const std::vector<std::array<double, 4>> direct = bilinear_current(t, kBg);
    CHECK(gordon_max_deviation(g, direct) < 1e-4);
    // longitudinal component vanishes identically for these states
    for (const std::array<double, 4>& row : direct) CHECK(row[3] == 0.0);
    CHECK(g.margin == 2);
    const std::size_t n = static_cast<std::size_t>(t.grid.n);
    for (std::size_t i : {std::size_t{0}, std::size_t{1}, n - 2, n - 1})
        for (int c = 0; c < 4; ++c) {
            CHECK(g.total[i][static_cast<std::size_t>(c)] == 0.0);
            CHECK(g.convection[i][static_cast<std::size_t>(c)] == 0.0);
            CHECK(g.spin[i][static_cast<std::size_t>(c)] == 0.0);
        }
    // moment densities are defined on every row, margins included
    CHECK(g.magnetization[0][2] > 0.0);
    CHECK(g.magnetization[n - 1][2] > 0.0);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        CHECK(g.convection[i][3] == 0.0); // no convection along the axis
        for (int c = 0; c < 4; ++c)
            CHECK(g.spin[i][static_cast<std::size_t>(c)] ==
                  doctest::Approx(g.total[i][static_cast<std::size_t>(c)] -
                                  g.convection[i][static_cast<std::size_t>(c)])
                      .epsilon(1e-15));
    }
    CHECK_THROWS_AS(
        gordon_max_deviation(g, std::vector<std::array<double, 4>>(5)),
        std::invalid_argument);
}

TEST_CASE("current split against hand-assembled static limit") {
    // synthetic two-component table: psi = (f, 0, 0, i g) with
    // f = e^{-rho^2}, g = 0.3 rho e^{-rho^2}, no rotation, no coupling
    const int n = 300;
    const RadialGrid grid(n, 6.0);
    SpinorTable t;
    t.grid = grid;
    t.qn = QuantumNumbers{0, 1, +1, 0.0};
    t.energy = 0.8;
    t.prefactor = 1.0;
    t.psi.resize(static_cast<std::size_t>(n));
    std::vector<double> f(static_cast<std::size_t>(n)), g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double rho = grid.node(i);
        f[static_cast<std::size_t>(i)] = std::exp(-rho * rho);
        g[static_cast<std::size_t>(i)] = 0.3 * rho * std::exp(-rho * rho);
        t.psi[static_cast<std::size_t>(i)] = {cplx(f[static_cast<std::size_t>(i)], 0.0),
                                              cplx(0.0, 0.0), cplx(0.0, 0.0),
                                              cplx(0.0, g[static_cast<std::size_t>(i)])};
    }
    const ParticleParams p{1.0, 0.0, 0.0};
    const BackgroundParams bg{1.0, 0.0};
    const GordonCurrents out = gordon_currents(t, p, bg);

    // independent assembly with the same central-difference stencil
    std::vector<double> q(static_cast<std::size_t>(n)), p1(static_cast<std::size_t>(n)),
        m3(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        q[k] = f[k] * f[k] - g[k] * g[k];
        p1[k] = -f[k] * g[k]; // / m = 1
        m3[k] = 0.5 * (f[k] * f[k] + g[k] * g[k]);
    }
    double max_t = 0.0, max_phi = 0.0, dev_t = 0.0, dev_phi = 0.0;
    for (int i = 2; i + 2 < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        const double rho = grid.node(i);
        const double rp = grid.node(i + 1), rm = grid.node(i - 1);
        const double divp = (rp * p1[k + 1] - rm * p1[k - 1]) / (2.0 * grid.h) / rho;
        const double dm3 =
            (rp * m3[k + 1] - rm * m3[k - 1]) / (2.0 * grid.h) / (rho * rho);
        const double jt = t.energy * q[k] + divp;
        const double jphi = 1.5 * q[k] / (rho * rho) - dm3;
        max_t = std::max(max_t, std::fabs(jt));
        max_phi = std::max(max_phi, std::fabs(jphi));
        dev_t = std::max(dev_t, std::fabs(out.total[k][0] - jt));
        dev_phi = std::max(dev_phi, std::fabs(out.total[k][2] - jphi));
        CHECK(out.total[k][1] == 0.0); // radial flow vanishes for real profiles
        CHECK(out.total[k][3] == 0.0); // no axial current without coupling
        CHECK(out.convection[k][0] == doctest::Approx(t.energy * q[k]).epsilon(1e-14));
    }
    CHECK(dev_t <= 1e-13 * max_t);
    CHECK(dev_phi <= 1e-13 * max_phi);
}

TEST_CASE("spinor pipeline is identical in serial and parallel execution") {
    const RadialGrid grid = test_grid(1500);
    const SpinorTable a = build_spinor(kQn, kParticle, kBg, grid, Exec::serial);
    const SpinorTable b = build_spinor(kQn, kParticle, kBg, grid, Exec::openmp);
    CHECK(a.prefactor == b.prefactor);
    REQUIRE(a.psi.size() == b.psi.size());
    for (std::size_t i = 0; i < a.psi.size(); ++i)
        for (int c = 0; c < 4; ++c)
            CHECK(a.psi[i][static_cast<std::size_t>(c)] ==
                  b.psi[i][static_cast<std::size_t>(c)]);
    CHECK(dirac_residual(a, kParticle, kBg, Exec::serial) ==
          dirac_residual(b, kParticle, kBg, Exec::openmp));
    CHECK(charge(a, kBg, Exec::serial) == charge(b, kBg, Exec::openmp));
    const std::vector<std::array<double, 4>> ca = bilinear_current(a, kBg, Exec::serial);
    const std::vector<std::array<double, 4>> cb = bilinear_current(b, kBg, Exec::openmp);
    const GordonCurrents ga = gordon_currents(a, kParticle, kBg, Exec::serial);
    const GordonCurrents gb = gordon_currents(b, kParticle, kBg, Exec::openmp);
    for (std::size_t i = 0; i < ca.size(); ++i)
        for (int c = 0; c < 4; ++c) {
            CHECK(ca[i][static_cast<std::size_t>(c)] == cb[i][static_cast<std::size_t>(c)]);
            CHECK(ga.total[i][static_cast<std::size_t>(c)] ==
                  gb.total[i][static_cast<std::size_t>(c)]);
            CHECK(ga.spin[i][static_cast<std::size_t>(c)] ==
                  gb.spin[i][static_cast<std::size_t>(c)]);
        }
}
