#pragma once

#include "arborescence.hpp"
#include "hitting.hpp"
#include "matrix.hpp"
#include "montecarlo.hpp"
#include "number.hpp"
#include "sequences.hpp"
#include "verify.hpp"
#include "wheel.hpp"

namespace wheelwalk {

inline constexpr const char* version = "1.0.0";

}  // namespace wheelwalk
