#ifndef NUMOID_HPP
#define NUMOID_HPP

#include "numoid/common.hpp"
#include "numoid/core.hpp"
#include "numoid/invariants.hpp"
#include "numoid/closedform.hpp"
#include "numoid/families.hpp"
#include "numoid/polynomial.hpp"
#include "numoid/linalg.hpp"
#include "numoid/falsifier.hpp"

#endif  // NUMOID_HPP
