#pragma once

#include "siegel/core.hpp"
#include "siegel/hyperbolic_plane.hpp"
#include "siegel/matrix_core.hpp"
#include "siegel/matrix_io.hpp"
#include "siegel/sampling.hpp"
#include "siegel/seb.hpp"
#include "siegel/siegel_klein.hpp"
#include "siegel/siegel_poincare.hpp"
#include "siegel/siegel_upper.hpp"
