#pragma once

#include "ihd/geometry.hpp"
#include "ihd/matching.hpp"
#include "ihd/upper_bound.hpp"
#include "ihd/candidates.hpp"
#include "ihd/place_together.hpp"
#include "ihd/independent_sets.hpp"
#include "ihd/k_centre.hpp"
#include "ihd/grown_discs.hpp"
#include "ihd/oracle.hpp"
#include "ihd/gadgets.hpp"
#include "ihd/instance_io.hpp"
#include "ihd/svg.hpp"
#include "ihd/generate.hpp"
