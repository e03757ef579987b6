#pragma once

#include "fracspec/bifurcation.hpp"
#include "fracspec/error.hpp"
#include "fracspec/format.hpp"
#include "fracspec/morse.hpp"
#include "fracspec/params.hpp"
#include "fracspec/roots.hpp"
#include "fracspec/specfun.hpp"
#include "fracspec/spectrum.hpp"
#include "fracspec/symbol.hpp"
#include "fracspec/thresholds.hpp"
