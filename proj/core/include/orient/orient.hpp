#pragma once

#include "orient/bell_engine.hpp"
#include "orient/classical.hpp"
#include "orient/cmat.hpp"
#include "orient/game_sim.hpp"
#include "orient/quantum_model.hpp"
#include "orient/rng.hpp"
#include "orient/spectral.hpp"
#include "orient/table.hpp"
#include "orient/version.hpp"
