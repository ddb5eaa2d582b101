/// @file hyperslice.hpp
/// @brief Umbrella header for the whole library.

#pragma once

#include "hyperslice/decompositions.hpp"
#include "hyperslice/expr.hpp"
#include "hyperslice/format.hpp"
#include "hyperslice/io.hpp"
#include "hyperslice/moments.hpp"
#include "hyperslice/random.hpp"
#include "hyperslice/verify.hpp"
