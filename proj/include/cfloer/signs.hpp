#pragma once

#include "cfloer/signs/signs.hpp"
