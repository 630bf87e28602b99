#pragma once

// Umbrella header for the whole library: exact normal ordering in the
// algebra generated by multiplication by x and the integration operator
// I = \int_0^x, which satisfy Ix - xI = -I^2.

#include "ixcalc/integer.hpp"
#include "ixcalc/rational.hpp"
#include "ixcalc/word.hpp"
#include "ixcalc/normal_form.hpp"
#include "ixcalc/rewrite.hpp"
#include "ixcalc/bessel.hpp"
#include "ixcalc/triangle.hpp"
#include "ixcalc/word_closed_form.hpp"
#include "ixcalc/oracle.hpp"
#include "ixcalc/parse.hpp"
#include "ixcalc/render.hpp"
