#pragma once

#include <vector>

#include "stabef/rational.hpp"

namespace stabef {

// Rank over Q by Gaussian elimination; the input is copied.
uint32_t rational_rank(std::vector<std::vector<Rational>> m);

}  // namespace stabef
