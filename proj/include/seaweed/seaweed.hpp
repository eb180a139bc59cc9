#pragma once

#include "seaweed/algebra.hpp"
#include "seaweed/arith.hpp"
#include "seaweed/composition.hpp"
#include "seaweed/decomposition.hpp"
#include "seaweed/enumerate.hpp"
#include "seaweed/errors.hpp"
#include "seaweed/forms.hpp"
#include "seaweed/linalg.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/render.hpp"
#include "seaweed/verify.hpp"
#include "seaweed/winding.hpp"
