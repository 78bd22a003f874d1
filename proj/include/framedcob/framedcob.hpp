#pragma once

#include "framedcob/clifford.hpp"
#include "framedcob/complex.hpp"
#include "framedcob/degree.hpp"
#include "framedcob/errors.hpp"
#include "framedcob/framed_loop.hpp"
#include "framedcob/gf2.hpp"
#include "framedcob/quadratic.hpp"
#include "framedcob/smith.hpp"
#include "framedcob/spin.hpp"
#include "framedcob/surface.hpp"
#include "framedcob/triangulations.hpp"
