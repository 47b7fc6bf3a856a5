#pragma once

#include "rotbeta/bounds.hpp"
#include "rotbeta/case_studies.hpp"
#include "rotbeta/geometry.hpp"
#include "rotbeta/holes.hpp"
#include "rotbeta/io.hpp"
#include "rotbeta/plank.hpp"
#include "rotbeta/preimages.hpp"
#include "rotbeta/rot_beta_map.hpp"
#include "rotbeta/stationary.hpp"
#include "rotbeta/ulam.hpp"
#include "rotbeta/verdict.hpp"
