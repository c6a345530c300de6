
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
 * @file bench.hpp
 * The benchmark harness: build the hierarchy once, check operator and
 * preconditioner symmetry, run repeated timed solves on identical inputs, and
 * aggregate per-level timing shares. Timing wraps the call sites with a
 * monotonic clock and never touches generation or coloring; setup time is
 * reported separately.
 *
 * For comparable timings across configurations, fix the iteration count via
 * BenchConfig::fixed_iterations instead of relying on the rtol stop.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "cg.hpp"
#include "dense_vector.hpp"
#include "error.hpp"
#include "multigrid.hpp"
#include "operations.hpp"
#include "problem.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "smoother.hpp"
#include "timing.hpp"

namespace slab {

	/**
	 * Tolerance for the symmetry checks, scaled by the vector norms, the
	 * stencil's diagonal magnitude, and the system size.
	 */
	inline double symmetry_tolerance( const DenseVector & x, const DenseVector & y ) {
		const double nx = std::sqrt( dot( x, x ) );
		const double ny = std::sqrt( dot( y, y ) );
		return 1e-8 * nx * ny * stencil_diagonal_value * std::sqrt( static_cast< double >( x.size() ) );
	}

	namespace detail {

		/** |x'(Op y) - y'(Op x)| for a linear operator given as out <- Op(in). */
		template< class Apply >
		inline double bilinear_asymmetry( Apply && apply, const DenseVector & x, const DenseVector & y ) {
			DenseVector tmp( x.size() );
			apply( tmp, y );
			const double lhs = dot( x, tmp );
			apply( tmp, x );
			const double rhs = dot( y, tmp );
			return std::abs( lhs - rhs );
		}

	} // namespace detail

	/**
	 * Draws two pseudo-random vectors from the seed and verifies that both the
	 * system matrix and the V-cycle preconditioner (applied from a zero guess)
	 * act as symmetric operators on them. Returns verdicts, never throws on
	 * failure.
	 */
	inline SymmetryReport symmetry_test( ProblemLevel & hierarchy, std::uint64_t seed,
		const SmootherConfig & smoother_cfg = {} ) {
		const std::size_t n = hierarchy.n();
		Lcg64 rng( seed );
		const DenseVector x = random_vector( n, rng );
		const DenseVector y = random_vector( n, rng );

		SymmetryReport out;
		out.tolerance = symmetry_tolerance( x, y );

		out.matrix_diff = detail::bilinear_asymmetry(
			[ &hierarchy ]( DenseVector & result, const DenseVector & in ) {
				mxv( result, hierarchy.A, in );
			},
			x, y );
		out.matrix_pass = out.matrix_diff <= out.tolerance;

		out.precond_diff = detail::bilinear_asymmetry(
			[ &hierarchy, &smoother_cfg ]( DenseVector & result, const DenseVector & in ) {
				set_all( result, 0.0 );
				mg_vcycle( hierarchy, result, in, smoother_cfg );
			},
			x, y );
		out.precond_pass = out.precond_diff <= out.tolerance;
		return out;
	}

	namespace detail {

		inline std::vector< LevelTimings > snapshot_levels( const ProblemLevel & finest ) {
			std::vector< LevelTimings > out;
			const ProblemLevel * level = &finest;
			std::size_t index = 0;
			while( level != nullptr ) {
				out.push_back( { index, level->n(), static_cast< double >( level->stats.smoother_ns ) * 1e-9,
					static_cast< double >( level->stats.transfer_ns ) * 1e-9,
					static_cast< double >( level->stats.mg_ns ) * 1e-9, level->stats.nnz_visited } );
				level = level->coarser.get();
				++index;
			}
			return out;
		}

		inline Aggregate aggregate_runs( const std::vector< RunRecord > & runs, std::size_t levels ) {
			Aggregate agg;
			if( runs.empty() ) {
				return agg;
			}
			double total_solve = 0.0;
			for( const RunRecord & run : runs ) {
				total_solve += run.solve_seconds;
			}
			agg.mean_solve_seconds = total_solve / static_cast< double >( runs.size() );

			double total_mg = 0.0;
			for( std::size_t level = 0; level < levels; ++level ) {
				double smoother = 0.0, transfer = 0.0;
				for( const RunRecord & run : runs ) {
					smoother += run.levels[ level ].smoother_seconds;
					transfer += run.levels[ level ].transfer_seconds;
					total_mg += run.levels[ level ].mg_seconds;
				}
				const double denom = total_solve > 0.0 ? total_solve : 1.0;
				agg.levels.push_back( { level, smoother / denom, transfer / denom } );
			}
			agg.mg_share = total_mg / ( total_solve > 0.0 ? total_solve : 1.0 );
			return agg;
		}

	} // namespace detail

	/**
	 * Runs the whole pipeline for one configuration. When the symmetry test
	 * fails, the report carries the failing verdicts and no timed runs; the
	 * caller decides how to abort (the CLI exits with code 2).
	 */
	inline Report run_benchmark( const BenchConfig & cfg ) {
		if( cfg.runs < 1 ) {
			throw InvalidArgument( "BenchConfig: runs must be at least 1" );
		}
		if( cfg.levels < 1 ) {
			throw InvalidArgument( "BenchConfig: levels must be at least 1" );
		}
		if( cfg.threads > 0 ) {
			set_max_threads( cfg.threads );
		}

		Report report;
		report.config = cfg;

		std::uint64_t t0 = detail::monotonic_ns();
		ProblemLevel hierarchy = build_hierarchy( cfg.dims, cfg.levels );
		report.generation_seconds = static_cast< double >( detail::monotonic_ns() - t0 ) * 1e-9;

		const SmootherConfig smoother_cfg{ cfg.sweeps };
		if( cfg.skip_symmetry ) {
			report.symmetry.skipped = true;
		} else {
			report.symmetry = symmetry_test( hierarchy, cfg.seed, smoother_cfg );
			if( !report.symmetry.all_pass() ) {
				return report;
			}
		}

		const DenseVector b = build_rhs( cfg.dims );
		const DenseVector x0( hierarchy.n(), 0.0 );
		const CGConfig solver_cfg{ cfg.max_iters, cfg.rtol, cfg.use_preconditioner, cfg.fixed_iterations };

		for( std::size_t run = 0; run < cfg.runs; ++run ) {
			hierarchy.reset_stats();
			t0 = detail::monotonic_ns();
			CGResult result = cg_solve( hierarchy, b, x0, solver_cfg, smoother_cfg );
			const double seconds = static_cast< double >( detail::monotonic_ns() - t0 ) * 1e-9;

			RunRecord record;
			record.run = run;
			record.solve_seconds = seconds;
			record.iterations = result.iterations;
			record.final_residual = result.residual_history.back();
			record.converged = result.converged;
			record.residual_history = std::move( result.residual_history );
			record.levels = detail::snapshot_levels( hierarchy );
			report.runs.push_back( std::move( record ) );
		}
		report.aggregate = detail::aggregate_runs( report.runs, hierarchy.depth() );
		return report;
	}

} // namespace slab
