#pragma once

#include "chern/bivariate.hpp"
#include "chern/euler_hypersurface.hpp"
#include "chern/exact_rational.hpp"
#include "chern/fulton_general.hpp"
#include "chern/graded_class.hpp"
#include "chern/hirzebruch.hpp"
#include "chern/param_rational.hpp"
#include "chern/partition.hpp"
#include "chern/polynomial.hpp"
#include "chern/serialize.hpp"
#include "chern/series.hpp"
#include "chern/verify.hpp"
