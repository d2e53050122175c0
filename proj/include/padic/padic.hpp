#pragma once

// Umbrella header.

#include "padic/errors.hpp"
#include "padic/exp_log.hpp"
#include "padic/gibbs/field.hpp"
#include "padic/gibbs/model.hpp"
#include "padic/gibbs/params.hpp"
#include "padic/gibbs/tree.hpp"
#include "padic/intops.hpp"
#include "padic/number.hpp"
#include "padic/residue.hpp"
#include "padic/solvers.hpp"
#include "padic/sqrt.hpp"
#include "padic/version.hpp"
