#pragma once

// Exact-arithmetic engine for root-system interval-firing dynamics, their
// Ehrhart-like polynomials, and lattice-point counts of permutohedra and
// polytope+zonotope Minkowski sums.

#include "rootfire/appendix.hpp"
#include "rootfire/ehrhart.hpp"
#include "rootfire/errors.hpp"
#include "rootfire/firing.hpp"
#include "rootfire/fourier_motzkin.hpp"
#include "rootfire/json_io.hpp"
#include "rootfire/linalg.hpp"
#include "rootfire/minkowski.hpp"
#include "rootfire/permutohedra.hpp"
#include "rootfire/poly.hpp"
#include "rootfire/rational.hpp"
#include "rootfire/root_system.hpp"
#include "rootfire/spans.hpp"
#include "rootfire/type_a.hpp"
