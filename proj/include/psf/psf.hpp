#pragma once

// Umbrella header for the pattern sequence forecasting library.

#include "psf/core.hpp"
#include "psf/clustering.hpp"
#include "psf/forecasting.hpp"
#include "psf/io.hpp"
