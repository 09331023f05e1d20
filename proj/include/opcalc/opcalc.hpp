#pragma once

/// Umbrella header.

#include "opcalc/expr.hpp"
#include "opcalc/graded_family.hpp"
#include "opcalc/json_io.hpp"
#include "opcalc/normal_series.hpp"
#include "opcalc/operators.hpp"
#include "opcalc/polynomial.hpp"
#include "opcalc/power_series.hpp"
#include "opcalc/recursion.hpp"
#include "opcalc/ring.hpp"
#include "opcalc/series_matrix.hpp"
#include "opcalc/sheffer.hpp"
#include "opcalc/vector.hpp"
#include "opcalc/word.hpp"
