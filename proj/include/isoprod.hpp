#pragma once

#include "isoprod/integer.hpp"
#include "isoprod/error.hpp"
#include "isoprod/rational.hpp"
#include "isoprod/bqf.hpp"
#include "isoprod/surface.hpp"
#include "isoprod/curves.hpp"
#include "isoprod/seshadri.hpp"
#include "isoprod/polarizations.hpp"
