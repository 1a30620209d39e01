#pragma once

// Umbrella header for the eulerkit library: exact generalized Euler
// polynomial computation and identity verification over Q[a][x].

#include "eulerkit/bigint.hpp"
#include "eulerkit/rational.hpp"
#include "eulerkit/binomial.hpp"
#include "eulerkit/alpha_poly.hpp"
#include "eulerkit/xpoly.hpp"
#include "eulerkit/trunc_series.hpp"
#include "eulerkit/euler_table.hpp"
#include "eulerkit/operators.hpp"
#include "eulerkit/table_cache.hpp"
#include "eulerkit/identity.hpp"
#include "eulerkit/theorem1.hpp"
#include "eulerkit/verify.hpp"
#include "eulerkit/probes.hpp"
#include "eulerkit/bfile.hpp"
#include "eulerkit/latex.hpp"
#include "eulerkit/parse_error.hpp"
