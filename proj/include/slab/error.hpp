
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

#pragma once

#include <stdexcept>

namespace slab {

	/** Base class of everything this library throws. */
	struct Error : std::runtime_error {
		using std::runtime_error::runtime_error;
	};

	/** Operand shapes do not line up: vector lengths, matrix sides, mask universes. */
	struct DimensionMismatch : Error {
		using Error::Error;
	};

	/** Invalid data while building a container, a problem instance, or a configuration. */
	struct InvalidArgument : Error {
		using Error::Error;
	};

	/** CG observed a non-positive p'Ap, i.e. the operator is not symmetric positive definite. */
	struct SolverBreakdown : Error {
		using Error::Error;
	};

} // namespace slab
