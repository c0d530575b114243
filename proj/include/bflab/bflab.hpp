#pragma once

// Umbrella header.

#include "bflab/analysis.hpp"
#include "bflab/cluster.hpp"
#include "bflab/crossratio.hpp"
#include "bflab/equations.hpp"
#include "bflab/formstats.hpp"
#include "bflab/generators.hpp"
#include "bflab/guard.hpp"
#include "bflab/plane.hpp"
#include "bflab/scalar.hpp"
#include "bflab/sets.hpp"
#include "bflab/setops.hpp"
#include "bflab/textio.hpp"

namespace bflab {

inline constexpr const char* kVersion = "bflab 1.0.0";

}  // namespace bflab
