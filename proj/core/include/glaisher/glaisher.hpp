#ifndef GLAISHER_GLAISHER_HPP
#define GLAISHER_GLAISHER_HPP

#include "glaisher/bench.hpp"
#include "glaisher/errors.hpp"
#include "glaisher/estimator.hpp"
#include "glaisher/integrands.hpp"
#include "glaisher/quadrature.hpp"
#include "glaisher/specfun.hpp"
#include "glaisher/summation.hpp"

#endif  // GLAISHER_GLAISHER_HPP
