#pragma once

// Random knots on Chebyshev billiard table diagrams T(3, n+1):
// crossing-sign words, reduction moves, 2-bridge classification, and the
// exact appearance-probability engine with its brute-force oracle and
// Monte Carlo sampler.

#include "chebknot/bigint.hpp"
#include "chebknot/continued_fraction.hpp"
#include "chebknot/errors.hpp"
#include "chebknot/exact_engine.hpp"
#include "chebknot/knot_class.hpp"
#include "chebknot/knot_names.hpp"
#include "chebknot/oracle.hpp"
#include "chebknot/parallel.hpp"
#include "chebknot/probability.hpp"
#include "chebknot/sampler.hpp"
#include "chebknot/serialize.hpp"
#include "chebknot/sign_word.hpp"
