#pragma once

// Everything except io.hpp, which additionally needs nlohmann/json.

#include "slq/algebra.hpp"
#include "slq/braid.hpp"
#include "slq/corep.hpp"
#include "slq/cyclo.hpp"
#include "slq/decompose.hpp"
#include "slq/error.hpp"
#include "slq/hopf.hpp"
#include "slq/linalg.hpp"
#include "slq/rewrite.hpp"
#include "slq/verify.hpp"
