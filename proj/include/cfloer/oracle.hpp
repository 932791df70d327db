#pragma once

#include "cfloer/oracle/simplex.hpp"
