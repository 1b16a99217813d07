#pragma once

#include <cstdint>

#include "dualperron/errors.hpp"

namespace dualperron {

/// Shared tolerances and caps for the eigenpair solvers.
struct SolverConfig {
    double tol_s = 1e-10;      ///< bracket-gap tolerance, standard part
    double tol_d = 1e-10;      ///< bracket-gap tolerance, |dual part|
    int max_iter = 5000;       ///< Collatz iteration cap
    int rate_window = 15;      ///< trailing iterations used for the rate fit
    std::uint64_t seed = 0;    ///< for generators; the solvers are deterministic

    double kernel_tol = 1e-10;   ///< tolerance handed to the real kernels
    double residual_tol = 1e-8;  ///< accepted eigen-residual per part
    int kernel_max_iter = 100000;

    void validate() const {
        if (!(tol_s > 0.0) || !(tol_d > 0.0))
            throw InvalidInputError("solver tolerances must be positive");
        if (max_iter < 1)
            throw InvalidInputError("max_iter must be at least 1");
        if (rate_window < 2)
            throw InvalidInputError("rate_window must be at least 2");
        if (!(kernel_tol > 0.0) || !(residual_tol > 0.0) || kernel_max_iter < 1)
            throw InvalidInputError("kernel tolerances must be positive");
    }
};

} // namespace dualperron
