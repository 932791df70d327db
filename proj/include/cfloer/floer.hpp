#pragma once

#include "cfloer/exterior.hpp"
#include "cfloer/floer/coboundary.hpp"
#include "cfloer/floer/full_differential.hpp"
#include "cfloer/floer/holonomy.hpp"
#include "cfloer/floer/homotopy.hpp"
#include "cfloer/floer/scan.hpp"
#include "cfloer/floer/spin.hpp"
#include "cfloer/scalars.hpp"
