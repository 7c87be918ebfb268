#include "hmw/kummer.hpp"

#include <cmath>
#include <stdexcept>

namespace hmw {

double kummer_m(const KummerArgs& args) {
    const double a = args.a;
    const double b = args.b;
    const double x = args.x;
    if (b <= 0.0 && b == std::floor(b))
        throw std::domain_error("kummer_m: b must not be a non-positive integer");
    if (x < 0.0) throw std::invalid_argument("kummer_m: x must be >= 0");

    // terminating case: a = -n with integer n >= 0 gives an (n+1)-term polynomial
    if (a <= 0.0 && a == std::floor(a)) {
        const int n = static_cast<int>(-a);
        double sum = 1.0;
        double term = 1.0;
        for (int k = 0; k < n; ++k) {
            const double kk = static_cast<double>(k);
            term *= (a + kk) / (b + kk) * x / (kk + 1.0);
            sum += term;
        }
        return sum;
    }

    double sum = 1.0;
    double term = 1.0;
    const int cap = 10000;
    for (int k = 0; k < cap; ++k) {
        const double kk = static_cast<double>(k);
        term *= (a + kk) / (b + kk) * x / (kk + 1.0);
        sum += term;
        if (!std::isfinite(sum))
            throw std::runtime_error("kummer_m: series overflowed before converging");
        if (std::fabs(term) <= 1e-16 * std::fabs(sum)) return sum;
    }
    throw std::runtime_error("kummer_m: series did not converge within 10000 terms");
}

} // namespace hmw
