#pragma once

#include "liekn/errors.hpp"
#include "liekn/rational.hpp"
#include "liekn/linalg.hpp"
#include "liekn/check_report.hpp"
#include "liekn/lie_algebra.hpp"
#include "liekn/representation.hpp"
#include "liekn/deformation.hpp"
#include "liekn/operators.hpp"
#include "liekn/structures.hpp"
#include "liekn/grid_search.hpp"
#include "liekn/catalog.hpp"
#include "liekn/io.hpp"
