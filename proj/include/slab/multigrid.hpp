
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

/**
 * @file multigrid.hpp
 * Recursive V-cycle preconditioner. One cycle at a level is: pre-smooth,
 * restrict the residual, recurse on the coarser level from a zero guess,
 * add the refined coarse correction back, post-smooth. Restriction is a
 * plain mxv on the rectangular injection matrix R; refinement applies R
 * through the transpose descriptor so the transpose is never materialized.
 *
 * The cycle allocates nothing: every intermediate lives in the level's
 * preallocated scratch vectors, which is also why at most one V-cycle may
 * run on a hierarchy at a time.
 */

#pragma once

#include <cstddef>

#include "dense_vector.hpp"
#include "descriptor.hpp"
#include "error.hpp"
#include "operations.hpp"
#include "problem.hpp"
#include "smoother.hpp"
#include "timing.hpp"

namespace slab {

	/** out = R * v_fine, projecting onto the next coarser level. */
	inline void restrict_vector( ProblemLevel & level, const DenseVector & v_fine, DenseVector & out ) {
		if( !level.restriction ) {
			throw InvalidArgument( "restrict_vector: the coarsest level has no restriction operator" );
		}
		const std::uint64_t t0 = detail::monotonic_ns();
		mxv( out, *level.restriction, v_fine );
		level.stats.transfer_ns += detail::monotonic_ns() - t0;
		level.stats.nnz_visited += level.restriction->nnz();
	}

	/** Allocating variant of restrict_vector. */
	inline DenseVector restrict_vector( ProblemLevel & level, const DenseVector & v_fine ) {
		if( !level.restriction ) {
			throw InvalidArgument( "restrict_vector: the coarsest level has no restriction operator" );
		}
		DenseVector out( level.restriction->nrows() );
		restrict_vector( level, v_fine, out );
		return out;
	}

	/**
	 * z += R^T * z_c: scatters the coarse correction onto the injected fine
	 * positions; every other position of z keeps its value. Clobbers the
	 * level's f scratch.
	 */
	inline DenseVector & refine_and_add( ProblemLevel & level, DenseVector & z, const DenseVector & z_c ) {
		if( !level.restriction ) {
			throw InvalidArgument( "refine_and_add: the coarsest level has no restriction operator" );
		}
		const std::uint64_t t0 = detail::monotonic_ns();
		mxv( level.f, *level.restriction, z_c, descriptors::transpose_matrix );
		waxpby( z, 1.0, z, 1.0, level.f );
		level.stats.transfer_ns += detail::monotonic_ns() - t0;
		level.stats.nnz_visited += level.restriction->nnz();
		return z;
	}

	/**
	 * One V-cycle improving z towards A z = r. The caller sets the initial
	 * guess; the CG driver always passes z = 0.
	 */
	inline DenseVector & mg_vcycle( ProblemLevel & level, DenseVector & z, const DenseVector & r,
		const SmootherConfig & smoother_cfg = {} ) {
		if( z.size() != level.n() || r.size() != level.n() ) {
			throw DimensionMismatch( "mg_vcycle: vector lengths differ from the level size" );
		}
		const std::uint64_t t0 = detail::monotonic_ns();

		rbgs_symmetric( level, z, r, smoother_cfg );
		if( !level.has_coarser() ) {
			level.stats.mg_ns += detail::monotonic_ns() - t0;
			return z;
		}

		mxv( level.f, level.A, z ); // f <- A z
		level.stats.nnz_visited += level.A.nnz();
		waxpby( level.f, 1.0, r, -1.0, level.f ); // f <- r - f
		restrict_vector( level, level.f, level.r_c );
		set_all( level.z_c, 0.0 );

		const std::uint64_t child_t0 = detail::monotonic_ns();
		mg_vcycle( *level.coarser, level.z_c, level.r_c, smoother_cfg );
		const std::uint64_t child_ns = detail::monotonic_ns() - child_t0;

		refine_and_add( level, z, level.z_c );
		rbgs_symmetric( level, z, r, smoother_cfg );

		// per-level time excludes the coarser levels
		level.stats.mg_ns += detail::monotonic_ns() - t0 - child_ns;
		return z;
	}

} // namespace slab
