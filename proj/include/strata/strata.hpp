#pragma once

// Umbrella header for the strata library.

#include "strata/arf.hpp"
#include "strata/billiard.hpp"
#include "strata/double_cover.hpp"
#include "strata/enumerate.hpp"
#include "strata/error.hpp"
#include "strata/gf2.hpp"
#include "strata/pattern.hpp"
#include "strata/rational.hpp"
#include "strata/spin.hpp"
#include "strata/stratum.hpp"
