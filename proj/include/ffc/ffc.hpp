#pragma once

// Umbrella header for the whole library.

#include "ffc/algebra.hpp"
#include "ffc/base.hpp"
#include "ffc/extension.hpp"
#include "ffc/filters.hpp"
#include "ffc/ground.hpp"
#include "ffc/ideals.hpp"
#include "ffc/instance.hpp"
#include "ffc/morphisms.hpp"
#include "ffc/oracle.hpp"
#include "ffc/randgen.hpp"
#include "ffc/rational.hpp"
#include "ffc/spectrum.hpp"
#include "ffc/verify.hpp"
