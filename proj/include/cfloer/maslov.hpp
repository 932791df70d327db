#pragma once

#include "cfloer/discs.hpp"
#include "cfloer/maslov/maslov.hpp"
