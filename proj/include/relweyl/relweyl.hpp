// Umbrella header.

#ifndef RELWEYL_RELWEYL_HPP_
#define RELWEYL_RELWEYL_HPP_

#include "charlat.hpp"
#include "criterion.hpp"
#include "error.hpp"
#include "levi.hpp"
#include "rational.hpp"
#include "rootsys.hpp"
#include "subgroup.hpp"

#endif // RELWEYL_RELWEYL_HPP_
