#ifndef BIVALENCE_BIVALENCE_HPP
#define BIVALENCE_BIVALENCE_HPP

#include "bivalence/error.hpp"
#include "bivalence/formula.hpp"
#include "bivalence/lattice.hpp"
#include "bivalence/nogo.hpp"
#include "bivalence/probability.hpp"
#include "bivalence/rational.hpp"
#include "bivalence/valuation.hpp"

#endif // BIVALENCE_BIVALENCE_HPP
