#pragma once

#include "spanlift/census.hpp"
#include "spanlift/diagram.hpp"
#include "spanlift/error.hpp"
#include "spanlift/genus.hpp"
#include "spanlift/half_int.hpp"
#include "spanlift/state_surface.hpp"
#include "spanlift/union_find.hpp"
#include "spanlift/random_diagram.hpp"
