#pragma once

#include "toric/error.hpp"
#include "toric/lattice.hpp"
#include "toric/polytope.hpp"
#include "toric/classify.hpp"
#include "toric/cuts.hpp"
#include "toric/delzant.hpp"
#include "toric/io.hpp"
