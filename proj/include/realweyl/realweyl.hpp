#pragma once

#include "realweyl/int_matrix.hpp"
#include "realweyl/root_lattice.hpp"
#include "realweyl/weyl_group.hpp"
#include "realweyl/involutions.hpp"
#include "realweyl/centralizer.hpp"
#include "realweyl/torus_components.hpp"
#include "realweyl/cremona.hpp"
#include "realweyl/oracles.hpp"
#include "realweyl/report.hpp"
