#pragma once

#include "specga/engine.hpp"
#include "specga/environment.hpp"
#include "specga/fitness.hpp"
#include "specga/genome.hpp"
#include "specga/rng.hpp"
