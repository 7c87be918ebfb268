#pragma once

namespace hmw {

// Execution policy for the parallel kernels. Every parallel code path has a
// serial twin that performs the identical per-element arithmetic; reductions
// are always run serially in a fixed order, so both policies produce
// bit-identical results and the serial path doubles as a reference
// implementation for tests and benchmarks.
enum class Exec {
    serial,
    openmp,
};

} // namespace hmw
