#pragma once

// Umbrella header: numeric verification and counterexample search for
// weighted-convexity classes and their integral mean inequalities.

#include "ineqforge/classes.hpp"
#include "ineqforge/config.hpp"
#include "ineqforge/errors.hpp"
#include "ineqforge/function.hpp"
#include "ineqforge/interval.hpp"
#include "ineqforge/quadrature.hpp"
#include "ineqforge/report_io.hpp"
#include "ineqforge/rng.hpp"
#include "ineqforge/runner.hpp"
#include "ineqforge/search.hpp"
#include "ineqforge/theorems.hpp"
