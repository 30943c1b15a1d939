#pragma once

// Umbrella header for the whole library.

#include "pushline/bench.hpp"
#include "pushline/congruence.hpp"
#include "pushline/diagonal.hpp"
#include "pushline/doubling.hpp"
#include "pushline/extending.hpp"
#include "pushline/folding.hpp"
#include "pushline/io.hpp"
#include "pushline/nice.hpp"
#include "pushline/nice_to_line.hpp"
#include "pushline/oracle.hpp"
#include "pushline/random_shape.hpp"
#include "pushline/recursion.hpp"
#include "pushline/render.hpp"
#include "pushline/topology.hpp"
#include "pushline/trace.hpp"
#include "pushline/turns.hpp"
#include "pushline/universal.hpp"
