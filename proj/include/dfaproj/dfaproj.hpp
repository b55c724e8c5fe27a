#pragma once

// Umbrella header.

#include "dfaproj/algebra.hpp"
#include "dfaproj/commutative.hpp"
#include "dfaproj/dfa.hpp"
#include "dfaproj/errors.hpp"
#include "dfaproj/explorer.hpp"
#include "dfaproj/io.hpp"
#include "dfaproj/minimize.hpp"
#include "dfaproj/orbits.hpp"
#include "dfaproj/projection.hpp"
#include "dfaproj/random.hpp"
#include "dfaproj/witness.hpp"
