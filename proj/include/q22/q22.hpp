#pragma once

#include "q22/error.hpp"
#include "q22/numeric.hpp"
#include "q22/twistor.hpp"
#include "q22/cr.hpp"
#include "q22/lines.hpp"
#include "q22/symmetries.hpp"
#include "q22/hyperplane_sections.hpp"
#include "q22/quadrics.hpp"
#include "q22/sections.hpp"
#include "q22/json_io.hpp"
#include "q22/figure.hpp"
