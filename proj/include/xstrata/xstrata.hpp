#pragma once

// Umbrella header for the X-state stratification library.

#include "xstrata/eigen.hpp"
#include "xstrata/groups.hpp"
#include "xstrata/matrix.hpp"
#include "xstrata/pauli.hpp"
#include "xstrata/sampling.hpp"
#include "xstrata/strata.hpp"
#include "xstrata/xstate.hpp"
