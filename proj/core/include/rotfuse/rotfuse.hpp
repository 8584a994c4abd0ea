// rotfuse: umbrella header.

#pragma once

#include "rotfuse/angles.hpp"
#include "rotfuse/convert.hpp"
#include "rotfuse/error.hpp"
#include "rotfuse/ops.hpp"
#include "rotfuse/oracle.hpp"
#include "rotfuse/quat.hpp"
#include "rotfuse/random.hpp"
#include "rotfuse/representations.hpp"
#include "rotfuse/rotmat.hpp"
#include "rotfuse/vec3.hpp"
