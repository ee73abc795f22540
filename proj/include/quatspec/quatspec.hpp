#pragma once

// Umbrella header: quaternionic spectral invariants at desk scale.

#include "quatspec/charpoly.hpp"
#include "quatspec/cmatrix.hpp"
#include "quatspec/eigensolver.hpp"
#include "quatspec/errors.hpp"
#include "quatspec/exact.hpp"
#include "quatspec/finite_rank.hpp"
#include "quatspec/growth.hpp"
#include "quatspec/invariants.hpp"
#include "quatspec/models.hpp"
#include "quatspec/polynomial.hpp"
#include "quatspec/qmatrix.hpp"
#include "quatspec/quaternion.hpp"
#include "quatspec/rng.hpp"
#include "quatspec/schatten.hpp"
