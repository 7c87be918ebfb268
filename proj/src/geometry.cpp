#include "hmw/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hmw {

void validate(const BackgroundParams& bg, bool allow_disclination) {
    if (!(bg.eta > 0.0) || !std::isfinite(bg.eta))
        throw std::invalid_argument("eta: must be positive and finite");
    if (bg.eta > 1.0 && !allow_disclination)
        throw std::invalid_argument(
            "eta: must lie in (0, 1]; values > 1 (disclination analogy) need the "
            "allow_disclination override");
    if (!(bg.omega >= 0.0) || !std::isfinite(bg.omega))
        throw std::invalid_argument("omega: must be non-negative and finite");
}

// All products below are factored through u = eta*rho and x = u*omega so the
// metric, the tetrad and the induced fields share roundoff exactly; the
// reconstruction identities then hold to machine precision.
MetricComponents metric_components(const BackgroundParams& bg, double rho) {
    if (rho < 0.0) throw std::domain_error("rho: must be >= 0");
    const double u = bg.eta * rho;
    const double x = u * bg.omega;
    return MetricComponents{x * x - 1.0, x * u, 1.0, u * u, 1.0};
}

Tetrad tetrad_at(const BackgroundParams& bg, double rho) {
    if (!(rho > 0.0))
        throw std::domain_error("rho: inverse tetrad singular at rho = 0");
    const double u = bg.eta * rho;
    const double x = u * bg.omega;
    Tetrad t;
    // co-frame rows theta^a_mu, coordinate order (t, rho, phi, z)
    t.comp[0] = {1.0, 0.0, 0.0, 0.0};
    t.comp[1] = {0.0, 1.0, 0.0, 0.0};
    t.comp[2] = {x, 0.0, u, 0.0};
    t.comp[3] = {0.0, 0.0, 0.0, 1.0};
    // inverse frame e^mu_a
    t.inverse[0] = {1.0, 0.0, 0.0, 0.0};          // e^t_a
    t.inverse[1] = {0.0, 1.0, 0.0, 0.0};          // e^rho_a
    t.inverse[2] = {-bg.omega, 0.0, 1.0 / u, 0.0}; // e^phi_a
    t.inverse[3] = {0.0, 0.0, 0.0, 1.0};          // e^z_a
    return t;
}

SpinConnection background_connection(const BackgroundParams& bg) {
    return SpinConnection{-(bg.omega * bg.eta), -bg.eta};
}

namespace {

// Coordinate pairs indexing the 2-form basis: t^rho, t^phi, t^z, rho^phi,
// rho^z, phi^z.
constexpr int kPairFirst[6] = {0, 0, 0, 1, 1, 2};
constexpr int kPairSecond[6] = {1, 2, 3, 2, 3, 3};

} // namespace

CartanReport cartan_check(const BackgroundParams& bg, const SpinConnection& conn) {
    // Evaluated at the reference radius rho = 1; every residual coefficient
    // is either rho-independent or linear in rho, so one radius decides.
    const double rho = 1.0;
    const double u = bg.eta * rho;
    const double x = u * bg.omega;

    // theta^a 1-form components and their radial derivatives
    const double theta[4][4] = {
        {1.0, 0.0, 0.0, 0.0},
        {0.0, 1.0, 0.0, 0.0},
        {x, 0.0, u, 0.0},
        {0.0, 0.0, 0.0, 1.0},
    };
    const double dtheta_drho[4][4] = {
        {0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0},
        {bg.eta * bg.omega, 0.0, bg.eta, 0.0},
        {0.0, 0.0, 0.0, 0.0},
    };

    // connection 1-forms w^a_b: only w^1_2 = -w^2_1 is non-null, with
    // components (dt, drho, dphi, dz)
    double w12[4] = {conn.w_t_12, 0.0, conn.w_phi_12, 0.0};

    CartanReport rep;
    for (int a = 0; a < 4; ++a) {
        for (int p = 0; p < 6; ++p) {
            const int mu = kPairFirst[p];
            const int nu = kPairSecond[p];
            // d theta^a: only d/drho of the components contributes, as
            // drho ^ dx^nu; coefficient of dx^mu ^ dx^nu
            double d = 0.0;
            if (mu == 1) d += dtheta_drho[a][nu];  // drho ^ dx^nu
            if (nu == 1) d -= dtheta_drho[a][mu];  // dx^mu ^ drho
            // w^a_b ^ theta^b
            double wedge = 0.0;
            if (a == 1) // w^1_2 ^ theta^2
                wedge = w12[mu] * theta[2][nu] - w12[nu] * theta[2][mu];
            else if (a == 2) // w^2_1 ^ theta^1 = -w^1_2 ^ theta^1
                wedge = -(w12[mu] * theta[1][nu] - w12[nu] * theta[1][mu]);
            const double r = d + wedge;
            rep.residuals[static_cast<std::size_t>(a)][static_cast<std::size_t>(p)] = r;
            rep.max_abs_residual = std::max(rep.max_abs_residual, std::fabs(r));
        }
    }
    const double scale = std::max(1.0, bg.eta * (1.0 + bg.omega));
    rep.pass = rep.max_abs_residual <= 1e-13 * scale;
    return rep;
}

CartanReport cartan_check(const BackgroundParams& bg) {
    return cartan_check(bg, background_connection(bg));
}

FieldTensor transform_field_tensor(const Tetrad& tetrad, const FieldTriple& local) {
    if (local.frame != Frame::local_rest)
        throw std::invalid_argument(
            "transform_field_tensor: fields must be tagged local_rest");
    // local orthonormal tensor: F^{0i} = -E^i, F^{ij} = -eps^{ijk} B_k
    double f_local[4][4] = {};
    for (int i = 0; i < 3; ++i) {
        f_local[0][i + 1] = -local.E[static_cast<std::size_t>(i)];
        f_local[i + 1][0] = local.E[static_cast<std::size_t>(i)];
    }
    f_local[1][2] = -local.B[2];
    f_local[2][1] = local.B[2];
    f_local[2][3] = -local.B[0];
    f_local[3][2] = local.B[0];
    f_local[3][1] = -local.B[1];
    f_local[1][3] = local.B[1];

    FieldTensor f{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            double acc = 0.0;
            for (int a = 0; a < 4; ++a) {
                const double ea = tetrad.inverse[static_cast<std::size_t>(mu)]
                                                [static_cast<std::size_t>(a)];
                if (ea == 0.0) continue;
                for (int b = 0; b < 4; ++b) {
                    const double eb = tetrad.inverse[static_cast<std::size_t>(nu)]
                                                    [static_cast<std::size_t>(b)];
                    if (eb == 0.0) continue;
                    acc += ea * eb * f_local[a][b];
                }
            }
            f[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = acc;
        }
    return f;
}

FieldTriple project_physical(const Tetrad& tetrad, const FieldTensor& f) {
    FieldTriple out;
    out.frame = Frame::local_rest;
    // electric part from the t row: E^i = -theta^0_t theta^i_nu F^{t nu}
    for (int i = 0; i < 3; ++i) {
        double acc = 0.0;
        for (int nu = 0; nu < 4; ++nu)
            acc += tetrad.comp[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(nu)] *
                   f[0][static_cast<std::size_t>(nu)];
        out.E[static_cast<std::size_t>(i)] = -tetrad.comp[0][0] * acc;
    }
    // magnetic part from the spatial-spatial local components; each co-frame
    // leg contracts over every coordinate index, so the time component of the
    // azimuthal leg cancels the frame-dragging piece of F^{phi z}
    double fhat[4][4] = {};
    for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j) {
            double acc = 0.0;
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n)
                    acc += tetrad.comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] *
                           tetrad.comp[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] *
                           f[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
            fhat[i][j] = acc;
        }
    out.B[0] = -fhat[2][3];
    out.B[1] = -fhat[3][1];
    out.B[2] = -fhat[1][2];
    return out;
}

FieldTriple induced_fields(const BackgroundParams& bg, double e0, double rho) {
    if (rho < 0.0) throw std::domain_error("rho: must be >= 0");
    FieldTriple ft;
    ft.frame = Frame::local_rest;
    ft.E = {0.0, 0.0, e0};
    const double u = bg.eta * rho;
    ft.B = {-(u * (bg.omega * e0)), 0.0, 0.0};
    return ft;
}

std::array<double, 4> effective_potential(int s, double d, const FieldTriple& fields) {
    if (s != 1 && s != -1) throw std::invalid_argument("s: must be +1 or -1");
    const double sd = static_cast<double>(s) * d;
    // z_hat x B = (-B_phi, B_rho, 0) in cylindrical physical components
    return {sd * fields.E[2], sd * (-fields.B[1]), sd * fields.B[0], 0.0};
}

EffectiveFieldCheck effective_magnetic_field(const BackgroundParams& bg, double e0,
                                             const RadialGrid& grid) {
    EffectiveFieldCheck out;
    out.closed_form = -2.0 * bg.omega * bg.eta * e0;
    const int n = grid.n;
    out.fd_curl.resize(static_cast<std::size_t>(n));
    // g(rho) = rho * (z_hat x B)_phi = rho * B_rho
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double rho = grid.node(i);
        g[static_cast<std::size_t>(i)] = rho * induced_fields(bg, e0, rho).B[0];
    }
    const double h = grid.h;
    for (int i = 0; i < n; ++i) {
        double dg;
        if (i == 0)
            dg = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h);
        else if (i == n - 1)
            dg = (3.0 * g[static_cast<std::size_t>(n - 1)] -
                  4.0 * g[static_cast<std::size_t>(n - 2)] +
                  g[static_cast<std::size_t>(n - 3)]) /
                 (2.0 * h);
        else
            dg = (g[static_cast<std::size_t>(i + 1)] - g[static_cast<std::size_t>(i - 1)]) /
                 (2.0 * h);
        const double curl = dg / grid.node(i);
        out.fd_curl[static_cast<std::size_t>(i)] = curl;
        out.max_abs_deviation =
            std::max(out.max_abs_deviation, std::fabs(curl - out.closed_form));
    }
    return out;
}

double physical_radius(const BackgroundParams& bg) {
    if (bg.omega == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (bg.omega * bg.eta);
}

} // namespace hmw
