#include "hmw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace hmw {

namespace {

// binomial(p, k) for real p: prod_{j=0}^{k-1} (p - j) / k!
double real_binomial(double p, int k) {
    double num = 1.0;
    double den = 1.0;
    for (int j = 0; j < k; ++j) {
        num *= p - static_cast<double>(j);
        den *= static_cast<double>(j + 1);
    }
    return num / den;
}

// c_i = i^2 [ (1 - 1/i)^p + (1 + 1/i)^p - 2 ]; evaluated directly for small i
// and by the even-order binomial series
//   c_i = 2 [ C(p,2) + C(p,4)/i^2 + C(p,6)/i^4 + ... ]
// once i is large enough that the direct form would cancel catastrophically.
double indicial_coefficient(double p, int i1) {
    const double i = static_cast<double>(i1);
    if (i1 <= 32) {
        const double lo = std::pow(1.0 - 1.0 / i, p);
        const double hi = std::pow(1.0 + 1.0 / i, p);
        return i * i * (lo + hi - 2.0);
    }
    const double inv2 = 1.0 / (i * i);
    double acc = real_binomial(p, 12);
    acc = acc * inv2 + real_binomial(p, 10);
    acc = acc * inv2 + real_binomial(p, 8);
    acc = acc * inv2 + real_binomial(p, 6);
    acc = acc * inv2 + real_binomial(p, 4);
    acc = acc * inv2 + real_binomial(p, 2);
    return 2.0 * acc;
}

} // namespace

TridiagonalOperator discretize(double zeta, double delta, double eta,
                               const RadialGrid& grid) {
    const int n = grid.n;
    TridiagonalOperator op;
    op.h = grid.h;
    op.diagonal.resize(static_cast<std::size_t>(n));
    op.off_diagonal.assign(static_cast<std::size_t>(n - 1), -1.0 / (grid.h * grid.h));
    const double p = std::abs(zeta) / eta + 0.5;
    const double two_over_h2 = 2.0 / (grid.h * grid.h);
    for (int i = 0; i < n; ++i) {
        const double rho = grid.node(i);
        const double c = indicial_coefficient(p, i + 1);
        const double dr = delta * rho;
        op.diagonal[static_cast<std::size_t>(i)] =
            two_over_h2 + c / (rho * rho) + dr * dr;
    }
    return op;
}

TridiagonalOperator discretize_plain(double zeta, double delta, double eta,
                                     const RadialGrid& grid) {
    const int n = grid.n;
    TridiagonalOperator op;
    op.h = grid.h;
    op.diagonal.resize(static_cast<std::size_t>(n));
    op.off_diagonal.assign(static_cast<std::size_t>(n - 1), -1.0 / (grid.h * grid.h));
    const double zz = zeta / eta;
    const double c = zz * zz - 0.25;
    const double two_over_h2 = 2.0 / (grid.h * grid.h);
    for (int i = 0; i < n; ++i) {
        const double rho = grid.node(i);
        const double dr = delta * rho;
        op.diagonal[static_cast<std::size_t>(i)] =
            two_over_h2 + c / (rho * rho) + dr * dr;
    }
    return op;
}

int sturm_count(const TridiagonalOperator& op, double lambda) {
    int count = 0;
    double d_prev = 1.0;
    const std::size_t n = op.diagonal.size();
    for (std::size_t i = 0; i < n; ++i) {
        double d = op.diagonal[i] - lambda;
        if (i > 0) d -= op.off_diagonal[i - 1] * op.off_diagonal[i - 1] / d_prev;
        if (d == 0.0) d = 1e-300; // nudge off the exact pivot breakdown
        if (d < 0.0) ++count;
        d_prev = d;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int count) {
    if (count < 1) throw std::invalid_argument("count: must be >= 1");
    const std::size_t n = op.diagonal.size();
    if (static_cast<std::size_t>(count) > n)
        throw std::invalid_argument("count: exceeds operator dimension");
    // Gershgorin bounds
    double lo = op.diagonal[0];
    double hi = op.diagonal[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::fabs(op.off_diagonal[i - 1]);
        if (i + 1 < n) r += std::fabs(op.off_diagonal[i]);
        lo = std::min(lo, op.diagonal[i] - r);
        hi = std::max(hi, op.diagonal[i] + r);
    }
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        double a = lo;
        double b = hi;
        // invariant: sturm_count(a) <= k < sturm_count(b)
        while (b - a > 1e-10) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break; // interval at roundoff limit
            if (sturm_count(op, mid) > k)
                b = mid;
            else
                a = mid;
        }
        out[static_cast<std::size_t>(k)] = 0.5 * (a + b);
    }
    for (int k = 1; k < count; ++k)
        if (!(out[static_cast<std::size_t>(k)] > out[static_cast<std::size_t>(k - 1)]))
            throw std::runtime_error(
                "lowest_eigenvalues: bisection returned non-increasing eigenvalues");
    return out;
}

double oracle_domain(double sigma_floor, double delta, double beta_max) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta: must be positive");
    const double sigma = std::max(sigma_floor, beta_max / delta + 35.0);
    return std::sqrt(sigma / delta);
}

std::vector<EigenReport> verify_spectrum(const ParticleParams& p, const BackgroundParams& bg,
                                         const std::vector<QuantumNumbers>& qn_set, double tol,
                                         const RadialGrid& grid, Exec exec) {
    validate(p);
    if (!(bg.omega > 0.0))
        throw std::invalid_argument("omega: bound states require omega > 0");
    const double delta = coupling_delta(p, bg);

    // Deduplicate: states sharing |zeta|/eta share one radial problem; solve
    // each problem once up to the largest n requested for it.
    struct Problem {
        double a;     // |zeta| / eta, keyed exactly on the double value
        int max_n;
        std::vector<double> betas; // filled later, lowest max_n + 1 eigenvalues
    };
    std::map<double, int> index_of; // a -> problem index
    std::vector<Problem> problems;
    std::vector<int> problem_of(qn_set.size());
    std::vector<double> a_of(qn_set.size());
    for (std::size_t i = 0; i < qn_set.size(); ++i) {
        validate(qn_set[i]);
        const double zeta = effective_angular_momentum(qn_set[i].l, qn_set[i].s, bg.eta);
        const double a = std::abs(zeta) / bg.eta;
        a_of[i] = a;
        auto it = index_of.find(a);
        if (it == index_of.end()) {
            index_of.emplace(a, static_cast<int>(problems.size()));
            problems.push_back(Problem{a, qn_set[i].n, {}});
            problem_of[i] = static_cast<int>(problems.size()) - 1;
        } else {
            problems[static_cast<std::size_t>(it->second)].max_n =
                std::max(problems[static_cast<std::size_t>(it->second)].max_n,
                         qn_set[i].n);
            problem_of[i] = it->second;
        }
    }

    const int n_problems = static_cast<int>(problems.size());
    auto solve_problem = [&](int pi) {
        Problem& prob = problems[static_cast<std::size_t>(pi)];
        // the operator depends on zeta and eta only through a = |zeta|/eta,
        // so pass (zeta = a, eta = 1) and keep a exactly
        const TridiagonalOperator op = discretize(prob.a, delta, 1.0, grid);
        prob.betas = lowest_eigenvalues(op, prob.max_n + 1);
    };
    if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
        for (int pi = 0; pi < n_problems; ++pi) solve_problem(pi);
    } else {
        for (int pi = 0; pi < n_problems; ++pi) solve_problem(pi);
    }

    std::vector<EigenReport> reports(qn_set.size());
    for (std::size_t i = 0; i < qn_set.size(); ++i) {
        const QuantumNumbers& qn = qn_set[i];
        EigenReport r;
        r.n = qn.n;
        r.l = qn.l;
        r.s = qn.s;
        r.eta = bg.eta;
        r.delta = delta;
        const double zeta = effective_angular_momentum(qn.l, qn.s, bg.eta);
        r.beta_analytic = analytic_beta(qn.n, zeta, delta, bg.eta);
        r.beta_numeric = problems[static_cast<std::size_t>(problem_of[i])]
                             .betas[static_cast<std::size_t>(qn.n)];
        r.rel_error = std::fabs(r.beta_numeric - r.beta_analytic) /
                      std::max(std::fabs(r.beta_analytic), 1e-300);
        r.grid_n = grid.n;
        r.rho_inf = grid.rho_inf;
        r.pass = r.rel_error <= tol;
        reports[i] = r;
    }
    return reports;
}

} // namespace hmw
