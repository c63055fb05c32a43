#pragma once

// Umbrella header.

#include "quadrantal/census.hpp"
#include "quadrantal/class_group.hpp"
#include "quadrantal/complex_roots.hpp"
#include "quadrantal/core.hpp"
#include "quadrantal/cyclotomic.hpp"
#include "quadrantal/ideal.hpp"
#include "quadrantal/json.hpp"
#include "quadrantal/matrix.hpp"
#include "quadrantal/number_field.hpp"
#include "quadrantal/polynomial.hpp"
#include "quadrantal/quadratic.hpp"
#include "quadrantal/units.hpp"
