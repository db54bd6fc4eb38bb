#pragma once

#include "cpvortex/dynamics.hpp"
#include "cpvortex/errors.hpp"
#include "cpvortex/geom.hpp"
#include "cpvortex/greens.hpp"
#include "cpvortex/momentum.hpp"
#include "cpvortex/su3flag.hpp"
#include "cpvortex/vortex_system.hpp"
