#pragma once

// Umbrella header: dual-number matrix algebra and Perron eigenpair solvers.

#include "dualperron/collatz.hpp"
#include "dualperron/dual_linalg.hpp"
#include "dualperron/dual_number.hpp"
#include "dualperron/errors.hpp"
#include "dualperron/experiments.hpp"
#include "dualperron/matrix_io.hpp"
#include "dualperron/perron.hpp"
#include "dualperron/real_spectral.hpp"
#include "dualperron/solver_config.hpp"
#include "dualperron/structure.hpp"
