
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
 * @file cg.hpp
 * Preconditioned conjugate-gradient driver in the standard Hestenes-Stiefel
 * form, with the multigrid V-cycle as the optional preconditioner. The driver
 * itself is sequential; all parallelism lives inside the primitives it calls.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "dense_vector.hpp"
#include "error.hpp"
#include "multigrid.hpp"
#include "operations.hpp"
#include "problem.hpp"
#include "smoother.hpp"

namespace slab {

	struct CGConfig {
		std::size_t max_iters = 500;
		/// relative residual target ||r||_2 / ||b||_2
		double rtol = 1e-6;
		bool use_preconditioner = true;
		/// when set, run exactly this many iterations and ignore rtol (timing runs)
		std::optional< std::size_t > fixed_iterations;
	};

	struct CGResult {
		std::size_t iterations = 0;
		/// ||r||_2 per iteration, the initial residual included
		std::vector< double > residual_history;
		bool converged = false;
		DenseVector solution;
	};

	/** ||b - A x||_2, computed through the primitive layer. */
	inline double residual_norm( const SparseMatrix & A, const DenseVector & x, const DenseVector & b ) {
		if( A.nrows() != b.size() || A.ncols() != x.size() ) {
			throw DimensionMismatch( "residual_norm: operand sizes do not match the matrix" );
		}
		DenseVector r( b.size() );
		mxv( r, A, x );
		waxpby( r, 1.0, b, -1.0, r );
		return std::sqrt( dot( r, r ) );
	}

	/**
	 * Solves A x = b on the hierarchy's finest level. Convergence is judged on
	 * the recurrence residual; the caller can recompute the true residual via
	 * residual_norm to bound recurrence drift.
	 *
	 * Throws SolverBreakdown when p'Ap <= 0 shows the operator (or a broken
	 * preconditioner upstream) is not symmetric positive definite.
	 */
	inline CGResult cg_solve( ProblemLevel & hierarchy, const DenseVector & b, const DenseVector & x0,
		const CGConfig & cfg = {}, const SmootherConfig & smoother_cfg = {} ) {
		if( cfg.rtol <= 0.0 ) {
			throw InvalidArgument( "CGConfig: rtol must be positive" );
		}
		if( cfg.max_iters < 1 ) {
			throw InvalidArgument( "CGConfig: max_iters must be at least 1" );
		}
		const std::size_t n = hierarchy.n();
		if( b.size() != n || x0.size() != n ) {
			throw DimensionMismatch( "cg_solve: vector lengths differ from the system size" );
		}

		CGResult out;
		out.solution = x0;
		DenseVector & x = out.solution;
		DenseVector r( n ), z( n ), p( n ), q( n );

		mxv( r, hierarchy.A, x );
		waxpby( r, 1.0, b, -1.0, r ); // r = b - A x

		const double b_norm = std::sqrt( dot( b, b ) );
		const double denom = b_norm > 0.0 ? b_norm : 1.0;
		double r_norm = std::sqrt( dot( r, r ) );
		out.residual_history.push_back( r_norm );

		const bool already_converged = !cfg.fixed_iterations && r_norm / denom < cfg.rtol;
		const std::size_t limit = already_converged ? 0
			: cfg.fixed_iterations ? std::min( *cfg.fixed_iterations, cfg.max_iters )
			: cfg.max_iters;

		double rho_prev = 0.0;
		for( std::size_t iter = 1; iter <= limit; ++iter ) {
			if( cfg.use_preconditioner ) {
				set_all( z, 0.0 ); // the V-cycle contract: start from a zero guess
				mg_vcycle( hierarchy, z, r, smoother_cfg );
			} else {
				waxpby( z, 1.0, r, 0.0, r );
			}
			const double rho = dot( r, z );
			if( iter == 1 ) {
				waxpby( p, 1.0, z, 0.0, z );
			} else {
				waxpby( p, 1.0, z, rho / rho_prev, p );
			}
			mxv( q, hierarchy.A, p );
			const double pq = dot( p, q );
			if( pq <= 0.0 ) {
				throw SolverBreakdown( "cg_solve: p'Ap <= 0, operator is not SPD" );
			}
			const double alpha = rho / pq;
			waxpby( x, 1.0, x, alpha, p );
			waxpby( r, 1.0, r, -alpha, q );
			rho_prev = rho;

			r_norm = std::sqrt( dot( r, r ) );
			out.residual_history.push_back( r_norm );
			if( !cfg.fixed_iterations && r_norm / denom < cfg.rtol ) {
				break;
			}
		}

		out.iterations = out.residual_history.size() - 1;
		out.converged = r_norm / denom < cfg.rtol;
		return out;
	}

} // namespace slab
