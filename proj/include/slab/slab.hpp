
/*
 *   Copyright 2026 the slab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/** @file slab.hpp Umbrella header. */

#pragma once

#include "bench.hpp"
#include "cg.hpp"
#include "coloring.hpp"
#include "cost_model.hpp"
#include "dense_vector.hpp"
#include "descriptor.hpp"
#include "error.hpp"
#include "index_mask.hpp"
#include "matrix_market.hpp"
#include "multigrid.hpp"
#include "operations.hpp"
#include "parallel.hpp"
#include "problem.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "semiring.hpp"
#include "smoother.hpp"
#include "sparse_matrix.hpp"
