#pragma once

// Everything except the command-line front end (conley/cli.hpp), which pulls
// in CLI11 and nlohmann/json.

#include "conley/conley_index.hpp"
#include "conley/degree.hpp"
#include "conley/dold.hpp"
#include "conley/error.hpp"
#include "conley/finite_map.hpp"
#include "conley/linalg.hpp"
#include "conley/matrix.hpp"
#include "conley/perm_endo.hpp"
#include "conley/polynomial.hpp"
#include "conley/radial.hpp"
#include "conley/rational.hpp"
#include "conley/realize.hpp"
