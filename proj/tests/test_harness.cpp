#include <doctest.h>

#include "superexp/harness.hpp"
#include "superexp/oracles.hpp"
#include "superexp/reductions.hpp"
