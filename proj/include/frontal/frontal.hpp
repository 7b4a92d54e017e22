#pragma once

// Umbrella header for the frontal library: exact polynomial arithmetic over
// the rationals, local-algebra colength computations, frontality and
// wave-front analysis of map germs, and the corank-2 counting pipeline.

#include "frontal/alpha_beta.hpp"
#include "frontal/colength.hpp"
#include "frontal/corank2.hpp"
#include "frontal/counting.hpp"
#include "frontal/gcd.hpp"
#include "frontal/germ_file.hpp"
#include "frontal/ideal.hpp"
#include "frontal/linear.hpp"
#include "frontal/map_germ.hpp"
#include "frontal/monomial.hpp"
#include "frontal/parser.hpp"
#include "frontal/polynomial.hpp"
#include "frontal/rational.hpp"
#include "frontal/report.hpp"
#include "frontal/series.hpp"
#include "frontal/staircase.hpp"
#include "frontal/var_context.hpp"
#include "frontal/version.hpp"
