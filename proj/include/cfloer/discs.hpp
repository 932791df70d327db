#pragma once

#include "cfloer/discs/blaschke.hpp"
#include "cfloer/discs/disc_json.hpp"
#include "cfloer/discs/random.hpp"
