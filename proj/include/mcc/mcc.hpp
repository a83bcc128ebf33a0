#ifndef MCC_MCC_HPP
#define MCC_MCC_HPP

#include "mcc/compare.hpp"
#include "mcc/construct.hpp"
#include "mcc/errors.hpp"
#include "mcc/params.hpp"
#include "mcc/pda.hpp"
#include "mcc/sim.hpp"
#include "mcc/validate.hpp"

#endif  // MCC_MCC_HPP
