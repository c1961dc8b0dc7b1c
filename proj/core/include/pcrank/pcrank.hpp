// Umbrella header.
#pragma once

#include "pcrank/dense_matrix.hpp"
#include "pcrank/error.hpp"
#include "pcrank/gm.hpp"
#include "pcrank/graph.hpp"
#include "pcrank/harker.hpp"
#include "pcrank/linalg.hpp"
#include "pcrank/lls.hpp"
#include "pcrank/metrics.hpp"
#include "pcrank/pc_matrix.hpp"
#include "pcrank/priority_vector.hpp"
#include "pcrank/validation.hpp"
