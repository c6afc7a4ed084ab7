#pragma once

#include "bench.hpp"
#include "csv.hpp"
#include "error.hpp"
#include "euler.hpp"
#include "exact_riemann.hpp"
#include "flux_schemes.hpp"
#include "fv_solver.hpp"
#include "grid.hpp"
#include "muscl.hpp"
