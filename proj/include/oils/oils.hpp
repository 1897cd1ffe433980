#pragma once

#include "oils/bench.hpp"
#include "oils/generator.hpp"
#include "oils/interval.hpp"
#include "oils/interval_linalg.hpp"
#include "oils/io.hpp"
#include "oils/lp_hull.hpp"
#include "oils/mat.hpp"
#include "oils/outcome.hpp"
#include "oils/point_linalg.hpp"
#include "oils/preconditioner.hpp"
#include "oils/rounding.hpp"
#include "oils/simplex.hpp"
#include "oils/solver_ge.hpp"
#include "oils/solver_iterative.hpp"
#include "oils/solver_lsq.hpp"
#include "oils/solver_rohn.hpp"
