#pragma once

#include <map>

#include <gmpxx.h>

#include "compchains/composition.hpp"
#include "compchains/operators.hpp"

namespace compchains {

/// Chain multiplicities of one weight layer, keyed by endpoint.
using Layer = std::map<Composition, mpz_class>;

/// Pushes every entry of the layer through all of its covers. Entries whose
/// width would exceed max_width are dropped (width never decreases along a
/// chain). max_width < 0 means unbounded.
Layer layer_step(const Layer& layer, const Alphabet& a, int max_width = -1);

/// Single-threaded reference for layer_step.
Layer layer_step_serial(const Layer& layer, const Alphabet& a, int max_width = -1);

}  // namespace compchains
