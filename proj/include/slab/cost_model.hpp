
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
 * @file cost_model.hpp
 * Analytic BSP cost model comparing two ways of distributing the grid across
 * p nodes before each mxv:
 *
 *  - geometric: the grid is split into px x py x pz blocks and each node
 *    exchanges the 2D face halos, h = 2(sx*sy + sy*sz + sx*sz) values for
 *    local block sides s_d = n_d / p_d;
 *  - 1D block-cyclic: rows are dealt round-robin, so every node needs the
 *    whole input vector and moves n(p-1)/p values.
 *
 * The model is analytic only — nothing is simulated or sent. Per superstep
 * both schemes synchronize once and compute on ~nnz/p stored entries.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "problem.hpp"

namespace slab {

	/** Factorization of the node count across the grid dimensions. */
	struct NodeGrid {
		std::size_t px = 1;
		std::size_t py = 1;
		std::size_t pz = 1;

		std::size_t p() const noexcept {
			return px * py * pz;
		}

		bool operator==( const NodeGrid & ) const = default;
	};

	/** Per-node cost of one mxv superstep under one distribution. */
	struct CostBreakdown {
		double computation = 0.0;        ///< stored nonzeros per node, nnz/p
		double communication = 0.0;      ///< values exchanged per node
		std::size_t synchronization = 1; ///< barriers per mxv
	};

	/**
	 * Face-halo exchange volume h = 2(sx*sy + sy*sz + sx*sz) with
	 * s_d = n_d / p_d. Every p_d must divide n_d. For the 1x1x1 grid this is
	 * the raw outer-face count even though such a node has nobody to talk to;
	 * compare_distributions reports that case as zero effective communication.
	 */
	inline std::size_t halo_volume( const GridDims & dims, const NodeGrid & grid ) {
		if( grid.px == 0 || grid.py == 0 || grid.pz == 0 ) {
			throw InvalidArgument( "halo_volume: node grid factors must be positive" );
		}
		if( dims.nx % grid.px != 0 || dims.ny % grid.py != 0 || dims.nz % grid.pz != 0 ) {
			throw InvalidArgument( "halo_volume: node grid does not divide the problem grid" );
		}
		const std::size_t sx = dims.nx / grid.px;
		const std::size_t sy = dims.ny / grid.py;
		const std::size_t sz = dims.nz / grid.pz;
		return 2 * ( sx * sy + sy * sz + sx * sz );
	}

	/**
	 * Exhaustive search for the factorization p = px*py*pz that minimizes the
	 * halo volume; ties prefer the most cubic local block (smallest max s_d),
	 * then the lexicographically smallest triple.
	 */
	inline NodeGrid factor_nodes( std::size_t p, const GridDims & dims ) {
		if( p < 1 ) {
			throw InvalidArgument( "factor_nodes: node count must be positive" );
		}
		bool found = false;
		NodeGrid best;
		std::size_t best_halo = 0;
		std::size_t best_max_side = 0;
		for( std::size_t px = 1; px <= p; ++px ) {
			if( p % px != 0 || dims.nx % px != 0 ) {
				continue;
			}
			const std::size_t rest = p / px;
			for( std::size_t py = 1; py <= rest; ++py ) {
				if( rest % py != 0 || dims.ny % py != 0 ) {
					continue;
				}
				const std::size_t pz = rest / py;
				if( dims.nz % pz != 0 ) {
					continue;
				}
				const NodeGrid candidate{ px, py, pz };
				const std::size_t halo = halo_volume( dims, candidate );
				const std::size_t max_side =
					std::max( { dims.nx / px, dims.ny / py, dims.nz / pz } );
				// lexicographic order is the enumeration order, so strict wins only
				const bool better = !found || halo < best_halo
					|| ( halo == best_halo && max_side < best_max_side );
				if( better ) {
					found = true;
					best = candidate;
					best_halo = halo;
					best_max_side = max_side;
				}
			}
		}
		if( !found ) {
			throw InvalidArgument( "factor_nodes: no factorization of p = " + std::to_string( p )
				+ " divides the grid" );
		}
		return best;
	}

	/** 1D block-cyclic exchange volume n(p-1)/p, rounded up. */
	inline std::size_t blockcyclic_comm_volume( std::size_t n, std::size_t p ) {
		if( p < 1 ) {
			throw InvalidArgument( "blockcyclic_comm_volume: node count must be positive" );
		}
		if( p == 1 ) {
			return 0;
		}
		return ( n * ( p - 1 ) + p - 1 ) / p;
	}

	/** Both cost models for one (grid, p) pair, plus the 2D block-cyclic comparison value. */
	struct DistributionComparison {
		std::size_t p = 1;
		NodeGrid grid;
		std::size_t halo_formula = 0; ///< raw face-halo value, kept even when p = 1
		CostBreakdown geometric;
		CostBreakdown blockcyclic;
		/// a 2D block-cyclic layout would move n/p*(sqrt(p)-1) values instead
		double blockcyclic2d_comm = 0.0;
	};

	inline DistributionComparison compare_distributions( const GridDims & dims, std::size_t p ) {
		DistributionComparison out;
		out.p = p;
		out.grid = factor_nodes( p, dims );
		out.halo_formula = halo_volume( dims, out.grid );

		const double n = static_cast< double >( dims.n() );
		const double compute = static_cast< double >( stencil_nnz( dims ) ) / static_cast< double >( p );

		out.geometric.computation = compute;
		out.geometric.communication = p == 1 ? 0.0 : static_cast< double >( out.halo_formula );
		out.geometric.synchronization = 1;

		out.blockcyclic.computation = compute;
		out.blockcyclic.communication = static_cast< double >( blockcyclic_comm_volume( dims.n(), p ) );
		out.blockcyclic.synchronization = 1;

		out.blockcyclic2d_comm = n / static_cast< double >( p ) * ( std::sqrt( static_cast< double >( p ) ) - 1.0 );
		return out;
	}

} // namespace slab
