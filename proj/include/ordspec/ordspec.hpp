#pragma once

// Umbrella header: element-order spectra of the simple groups with abelian
// Sylow 2-subgroups, their direct squares, nonsolvability witnesses, and the
// brute-force enumeration oracles.

#include "ordspec/criteria.hpp"
#include "ordspec/enumerate.hpp"
#include "ordspec/families.hpp"
#include "ordspec/gf.hpp"
#include "ordspec/j1.hpp"
#include "ordspec/matrix.hpp"
#include "ordspec/numtheory.hpp"
#include "ordspec/psl2.hpp"
#include "ordspec/spectrum.hpp"
#include "ordspec/version.hpp"
#include "ordspec/witness.hpp"
