
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
 * @file smoother.hpp
 * Multicolor (red-black) Gauss-Seidel smoother built from masked mxv plus a
 * per-index update.
 *
 * For each color, a masked mxv computes s[i] = sum_j A[i,j]*z[j] on the
 * color's members only, then every member solves its own equation:
 *
 *     z[i] <- (r[i] - s[i] + z[i]*d[i]) / d[i],   d = extracted diagonal,
 *
 * where adding z[i]*d[i] back cancels the diagonal term included in s[i].
 * Members of one color never neighbor each other, so the update order within
 * a color is irrelevant and the whole color runs in parallel; colors are
 * processed strictly in sequence to honor the dependencies between them.
 */

#pragma once

#include <cstddef>

#include "dense_vector.hpp"
#include "descriptor.hpp"
#include "error.hpp"
#include "operations.hpp"
#include "problem.hpp"
#include "timing.hpp"

namespace slab {

	/** Number of symmetric (forward then backward) applications per smoothing call. */
	struct SmootherConfig {
		std::size_t sweeps = 1;
	};

	namespace detail {

		inline void check_smoother_args( const ProblemLevel & level, const DenseVector & z, const DenseVector & r ) {
			if( z.size() != level.n() || r.size() != level.n() ) {
				throw DimensionMismatch( "smoother: vector lengths differ from the level size" );
			}
		}

		inline void rbgs_color_step( ProblemLevel & level, std::size_t k, DenseVector & z, const DenseVector & r ) {
			const IndexMask & mask = level.colors.masks[ k ];
			mxv( level.s, mask, level.A, z, descriptors::structural );
			const DenseVector & s = level.s;
			const DenseVector & d = level.a_diag;
			apply_masked(
				mask,
				[ & ]( std::size_t i ) {
					z[ i ] = ( r[ i ] - s[ i ] + z[ i ] * d[ i ] ) / d[ i ];
				},
				z, r, level.s, level.a_diag );
			level.stats.nnz_visited += level.color_nnz[ k ];
		}

	} // namespace detail

	/** One forward sweep: colors in increasing order. */
	inline DenseVector & rbgs_forward( ProblemLevel & level, DenseVector & z, const DenseVector & r ) {
		detail::check_smoother_args( level, z, r );
		const std::uint64_t t0 = detail::monotonic_ns();
		for( std::size_t k = 0; k < level.colors.num_colors; ++k ) {
			detail::rbgs_color_step( level, k, z, r );
		}
		level.stats.smoother_ns += detail::monotonic_ns() - t0;
		return z;
	}

	/**
	 * One backward sweep: colors in decreasing order. Only the color order is
	 * reversed — within a color the order is irrelevant by independence, so
	 * this reproduces the dependency structure of a reversed global sweep.
	 */
	inline DenseVector & rbgs_backward( ProblemLevel & level, DenseVector & z, const DenseVector & r ) {
		detail::check_smoother_args( level, z, r );
		const std::uint64_t t0 = detail::monotonic_ns();
		for( std::size_t k = level.colors.num_colors; k > 0; --k ) {
			detail::rbgs_color_step( level, k - 1, z, r );
		}
		level.stats.smoother_ns += detail::monotonic_ns() - t0;
		return z;
	}

	/** cfg.sweeps repetitions of forward sweep followed by backward sweep. */
	inline DenseVector & rbgs_symmetric( ProblemLevel & level, DenseVector & z, const DenseVector & r,
		const SmootherConfig & cfg = {} ) {
		if( cfg.sweeps < 1 ) {
			throw InvalidArgument( "SmootherConfig: sweeps must be at least 1" );
		}
		for( std::size_t sweep = 0; sweep < cfg.sweeps; ++sweep ) {
			rbgs_forward( level, z, r );
			rbgs_backward( level, z, r );
		}
		return z;
	}

} // namespace slab
