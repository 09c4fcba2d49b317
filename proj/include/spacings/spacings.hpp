#ifndef SPACINGS_SPACINGS_HPP
#define SPACINGS_SPACINGS_HPP

// Umbrella header.

#include "spacings/counts.hpp"
#include "spacings/distributions.hpp"
#include "spacings/inference.hpp"
#include "spacings/limit_laws.hpp"
#include "spacings/rng.hpp"
#include "spacings/sampling.hpp"
#include "spacings/stats_tests.hpp"

#endif  // SPACINGS_SPACINGS_HPP
