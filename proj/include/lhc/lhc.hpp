#pragma once

// Umbrella header: exact-arithmetic Hilbert bases of lecture hall cones,
// brute-force oracle, closed-form family constructors, lattice-point
// counting, Gorenstein classification, and report emission.

#include "lhc/basis.hpp"
#include "lhc/closed_form.hpp"
#include "lhc/cone.hpp"
#include "lhc/ehrhart.hpp"
#include "lhc/enumerate.hpp"
#include "lhc/gorenstein.hpp"
#include "lhc/int.hpp"
#include "lhc/oracle.hpp"
#include "lhc/report.hpp"
#include "lhc/sequence.hpp"
#include "lhc/verify.hpp"
