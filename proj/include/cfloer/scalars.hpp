#pragma once

#include "cfloer/scalars/approx_complex.hpp"
#include "cfloer/scalars/cyclotomic.hpp"
#include "cfloer/scalars/field.hpp"
#include "cfloer/scalars/holonomy_text.hpp"
#include "cfloer/scalars/novikov.hpp"
#include "cfloer/scalars/rational.hpp"
