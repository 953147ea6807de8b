#pragma once

#include "tsol/dense_frame.hpp"
#include "tsol/errors.hpp"
#include "tsol/filling.hpp"
#include "tsol/lattice.hpp"
#include "tsol/normal_form.hpp"
#include "tsol/orbit_explorer.hpp"
#include "tsol/pathfinder.hpp"
#include "tsol/pattern.hpp"
#include "tsol/pattern_io.hpp"
#include "tsol/point.hpp"
#include "tsol/tep.hpp"
