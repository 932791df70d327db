#pragma once

#include "cfloer/exterior/exterior_class.hpp"
#include "cfloer/exterior/index_set.hpp"
#include "cfloer/exterior/koszul.hpp"
#include "cfloer/exterior/matrix.hpp"
