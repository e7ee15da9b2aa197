#pragma once

// Convenience header pulling in the whole library.

#include "sdfdirac/approx.hpp"
#include "sdfdirac/errors.hpp"
#include "sdfdirac/io.hpp"
#include "sdfdirac/jacobi.hpp"
#include "sdfdirac/model.hpp"
#include "sdfdirac/nu.hpp"
#include "sdfdirac/ode.hpp"
#include "sdfdirac/parallel.hpp"
#include "sdfdirac/quadrature.hpp"
#include "sdfdirac/shooting.hpp"
#include "sdfdirac/spectrum.hpp"
#include "sdfdirac/tables.hpp"
#include "sdfdirac/wavefunction.hpp"
