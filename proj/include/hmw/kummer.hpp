#pragma once

namespace hmw {

// Confluent hypergeometric function of the first kind, M(a, b, x).
struct KummerArgs {
    double a;
    double b; // must not be a non-positive integer
    double x; // must be >= 0
};

// Power series sum_k (a)_k / (b)_k x^k / k! to relative accuracy 1e-13.
// When a is a non-positive integer -n the series terminates exactly after
// n+1 terms and is evaluated as that polynomial. Throws std::domain_error
// for a pole (b a non-positive integer), std::invalid_argument for x < 0,
// std::runtime_error if the series fails to converge within the term cap.
double kummer_m(const KummerArgs& args);

} // namespace hmw
