#pragma once

// Fast discrete Legendre transform and inverse: a Legendre->Chebyshev basis
// change composed with a Taylor-corrected non-uniform cosine transform, plus
// Gauss-Legendre grids and direct O(N^2) reference implementations.

#include "fastleg/conversion.hpp"
#include "fastleg/ndct.hpp"
#include "fastleg/oracle.hpp"
#include "fastleg/quadrature.hpp"
#include "fastleg/random.hpp"
#include "fastleg/transforms.hpp"
#include "fastleg/trig.hpp"
#include "fastleg/types.hpp"
#include "fastleg/vector_io.hpp"
