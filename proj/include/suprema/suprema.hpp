#ifndef SUPREMA_SUPREMA_HPP
#define SUPREMA_SUPREMA_HPP

#include "suprema/alphabet.hpp"
#include "suprema/errors.hpp"
#include "suprema/independence.hpp"
#include "suprema/lang.hpp"
#include "suprema/operators.hpp"
#include "suprema/oracle.hpp"
#include "suprema/problem.hpp"
#include "suprema/properties.hpp"
#include "suprema/solvers.hpp"
#include "suprema/topology.hpp"

#endif  // SUPREMA_SUPREMA_HPP
