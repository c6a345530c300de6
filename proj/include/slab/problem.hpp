
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
 * @file problem.hpp
 * Generation of the heat-diffusion benchmark problem: the 27-point stencil
 * matrix on a 3D grid, the all-ones right-hand side, the straight-injection
 * restriction operators, and the chain of multigrid levels with their
 * preallocated workspaces.
 *
 * Generation is setup-time and single-threaded; everything it produces is
 * immutable afterwards and safe to share across threads.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "dense_vector.hpp"
#include "error.hpp"
#include "sparse_matrix.hpp"

namespace slab {

	// stencil coefficients as in the standard HPCG problem
	inline constexpr double stencil_diagonal_value = 26.0;
	inline constexpr double stencil_off_diagonal_value = -1.0;

	/** Points per dimension of a 3D grid. */
	struct GridDims {
		std::size_t nx = 0;
		std::size_t ny = 0;
		std::size_t nz = 0;

		std::size_t n() const noexcept {
			return nx * ny * nz;
		}

		bool operator==( const GridDims & ) const = default;
	};

	/** Grid generation requires at least two points per dimension. */
	inline void validate_dims( const GridDims & dims ) {
		if( dims.nx < 2 || dims.ny < 2 || dims.nz < 2 ) {
			throw InvalidArgument( "grid dimensions must all be at least 2, got " + std::to_string( dims.nx ) + "x"
				+ std::to_string( dims.ny ) + "x" + std::to_string( dims.nz ) );
		}
	}

	/** x-fastest grid ordering: i = ix + nx*(iy + ny*iz). */
	inline std::size_t linearize( const GridDims & dims, std::size_t ix, std::size_t iy, std::size_t iz ) {
		if( ix >= dims.nx || iy >= dims.ny || iz >= dims.nz ) {
			throw InvalidArgument( "linearize: coordinates out of range" );
		}
		return ix + dims.nx * ( iy + dims.ny * iz );
	}

	/** Exact nonzero count of the stencil matrix: (3nx-2)(3ny-2)(3nz-2). */
	inline std::size_t stencil_nnz( const GridDims & dims ) {
		return ( 3 * dims.nx - 2 ) * ( 3 * dims.ny - 2 ) * ( 3 * dims.nz - 2 );
	}

	/**
	 * 27-point stencil operator: row i holds one entry per grid point inside
	 * the 3x3x3 neighborhood of point i that lies within the grid, with value
	 * 26 on the diagonal and -1 off it. Rows have 8 (corner) to 27 (interior)
	 * entries and the matrix is exactly symmetric.
	 */
	inline SparseMatrix build_matrix( const GridDims & dims ) {
		validate_dims( dims );
		const std::size_t n = dims.n();

		std::vector< std::size_t > offsets( n + 1, 0 );
		std::size_t row = 0;
		for( std::size_t iz = 0; iz < dims.nz; ++iz ) {
			const std::size_t span_z = ( iz > 0 ? 1 : 0 ) + 1 + ( iz + 1 < dims.nz ? 1 : 0 );
			for( std::size_t iy = 0; iy < dims.ny; ++iy ) {
				const std::size_t span_y = ( iy > 0 ? 1 : 0 ) + 1 + ( iy + 1 < dims.ny ? 1 : 0 );
				for( std::size_t ix = 0; ix < dims.nx; ++ix ) {
					const std::size_t span_x = ( ix > 0 ? 1 : 0 ) + 1 + ( ix + 1 < dims.nx ? 1 : 0 );
					offsets[ row + 1 ] = offsets[ row ] + span_x * span_y * span_z;
					++row;
				}
			}
		}

		std::vector< std::size_t > cols( offsets[ n ] );
		std::vector< double > vals( offsets[ n ] );
		std::size_t at = 0;
		for( std::size_t iz = 0; iz < dims.nz; ++iz ) {
			for( std::size_t iy = 0; iy < dims.ny; ++iy ) {
				for( std::size_t ix = 0; ix < dims.nx; ++ix ) {
					const std::size_t i = ix + dims.nx * ( iy + dims.ny * iz );
					// neighbor coordinates ascend lexicographically in (z, y, x),
					// which keeps the linearized columns strictly increasing
					for( std::size_t jz = iz > 0 ? iz - 1 : 0; jz < dims.nz && jz <= iz + 1; ++jz ) {
						for( std::size_t jy = iy > 0 ? iy - 1 : 0; jy < dims.ny && jy <= iy + 1; ++jy ) {
							for( std::size_t jx = ix > 0 ? ix - 1 : 0; jx < dims.nx && jx <= ix + 1; ++jx ) {
								const std::size_t j = jx + dims.nx * ( jy + dims.ny * jz );
								cols[ at ] = j;
								vals[ at ] = j == i ? stencil_diagonal_value : stencil_off_diagonal_value;
								++at;
							}
						}
					}
				}
			}
		}
		return SparseMatrix::from_csr( n, n, std::move( offsets ), std::move( cols ), std::move( vals ) );
	}

	/** Right-hand side of the benchmark problem: the all-ones vector. */
	inline DenseVector build_rhs( const GridDims & dims ) {
		validate_dims( dims );
		return DenseVector( dims.n(), 1.0 );
	}

	/**
	 * Copies the stored diagonal into a dedicated vector, so the smoother can
	 * read A[i,i] in constant time.
	 */
	inline DenseVector extract_diagonal( const SparseMatrix & A ) {
		if( A.nrows() != A.ncols() ) {
			throw DimensionMismatch( "extract_diagonal: matrix must be square" );
		}
		DenseVector d( A.nrows() );
		for( std::size_t i = 0; i < A.nrows(); ++i ) {
			const auto cols = A.row_cols( i );
			const auto vals = A.row_values( i );
			double value = 0.0;
			bool found = false;
			for( std::size_t k = 0; k < cols.size(); ++k ) {
				if( cols[ k ] == i ) {
					value = vals[ k ];
					found = true;
					break;
				}
			}
			if( !found || value == 0.0 ) {
				throw InvalidArgument( "extract_diagonal: row " + std::to_string( i ) + " has no usable diagonal entry" );
			}
			d[ i ] = value;
		}
		return d;
	}

	/**
	 * Straight-injection restriction: an (n/8) x n matrix with exactly one
	 * entry of 1.0 per row, at the fine-grid point with the lowest coordinates
	 * of each 2x2x2 octet. Refinement is its transpose and is applied through
	 * the transpose descriptor instead of being materialized.
	 */
	inline SparseMatrix build_restriction( const GridDims & fine ) {
		validate_dims( fine );
		for( const auto & [ name, value ] :
			{ std::pair< const char *, std::size_t >{ "nx", fine.nx }, { "ny", fine.ny }, { "nz", fine.nz } } ) {
			if( value % 2 != 0 ) {
				throw InvalidArgument( std::string( "build_restriction: dimension " ) + name + " = "
					+ std::to_string( value ) + " is odd" );
			}
		}
		const GridDims coarse{ fine.nx / 2, fine.ny / 2, fine.nz / 2 };
		const std::size_t nc = coarse.n();

		std::vector< std::size_t > offsets( nc + 1 );
		std::vector< std::size_t > cols( nc );
		std::vector< double > vals( nc, 1.0 );
		std::size_t c = 0;
		for( std::size_t cz = 0; cz < coarse.nz; ++cz ) {
			for( std::size_t cy = 0; cy < coarse.ny; ++cy ) {
				for( std::size_t cx = 0; cx < coarse.nx; ++cx ) {
					offsets[ c ] = c;
					cols[ c ] = linearize( fine, 2 * cx, 2 * cy, 2 * cz );
					++c;
				}
			}
		}
		offsets[ nc ] = nc;
		return SparseMatrix::from_csr( nc, fine.n(), std::move( offsets ), std::move( cols ), std::move( vals ) );
	}

	/** Counters the solver layers accumulate while they run; see reset_stats(). */
	struct LevelStats {
		std::uint64_t smoother_ns = 0; ///< wall time inside the smoother sweeps
		std::uint64_t transfer_ns = 0; ///< wall time inside restriction/refinement
		std::uint64_t mg_ns = 0;       ///< wall time of the V-cycle at this level, coarser levels excluded
		std::uint64_t nnz_visited = 0; ///< stored nonzeros touched by the kernels
	};

	/**
	 * One multigrid level: the system matrix with its extracted diagonal and
	 * coloring, the restriction towards the next coarser level, a link to that
	 * level, and the scratch vectors the solve path needs. All scratch space
	 * is allocated here, at build time, so a V-cycle allocates nothing.
	 *
	 * A level owns its scratch exclusively: run at most one V-cycle per
	 * hierarchy at a time.
	 */
	struct ProblemLevel {
		GridDims dims;
		SparseMatrix A;
		DenseVector a_diag;
		Coloring colors;
		std::vector< std::uint64_t > color_nnz; ///< stored nonzeros per color mask, for the visit counters
		std::optional< SparseMatrix > restriction;
		std::unique_ptr< ProblemLevel > coarser;
		DenseVector s;   ///< smoother scratch (fine length)
		DenseVector f;   ///< residual / refinement scratch (fine length)
		DenseVector r_c; ///< restricted residual (coarse length; empty at the coarsest level)
		DenseVector z_c; ///< coarse correction (coarse length; empty at the coarsest level)
		LevelStats stats;

		ProblemLevel( GridDims level_dims, SparseMatrix matrix )
			: dims( level_dims ), A( std::move( matrix ) ), a_diag( extract_diagonal( A ) ),
			colors( greedy_color( A ) ), s( A.nrows() ), f( A.nrows() ) {
			color_nnz.reserve( colors.num_colors );
			const auto offsets = A.row_offsets();
			for( const IndexMask & mask : colors.masks ) {
				std::uint64_t count = 0;
				for( const std::size_t i : mask.members() ) {
					count += offsets[ i + 1 ] - offsets[ i ];
				}
				color_nnz.push_back( count );
			}
		}

		/**
		 * Standalone level around an arbitrary square system, for running the
		 * smoother or CG outside any grid hierarchy. The dims record a logical
		 * n x 1 x 1 layout.
		 */
		explicit ProblemLevel( SparseMatrix matrix ) : ProblemLevel( GridDims{ matrix.nrows(), 1, 1 }, std::move( matrix ) ) {}

		ProblemLevel( ProblemLevel && ) = default;
		ProblemLevel & operator=( ProblemLevel && ) = default;
		ProblemLevel( const ProblemLevel & ) = delete;
		ProblemLevel & operator=( const ProblemLevel & ) = delete;

		std::size_t n() const noexcept {
			return A.nrows();
		}
		bool has_coarser() const noexcept {
			return coarser != nullptr;
		}
		std::size_t depth() const noexcept {
			return 1 + ( coarser ? coarser->depth() : 0 );
		}

		/** Zeroes the counters of this level and every coarser one. */
		void reset_stats() {
			stats = LevelStats{};
			if( coarser ) {
				coarser->reset_stats();
			}
		}
	};

	/**
	 * Builds the chain of `levels` problem levels, halving every dimension
	 * from one level to the next. Each dimension must be divisible by
	 * 2^(levels-1) with a quotient of at least 2.
	 */
	inline ProblemLevel build_hierarchy( const GridDims & dims, std::size_t levels ) {
		validate_dims( dims );
		if( levels < 1 ) {
			throw InvalidArgument( "build_hierarchy: need at least one level" );
		}
		const std::size_t divider = std::size_t( 1 ) << ( levels - 1 );
		for( const auto & [ name, value ] :
			{ std::pair< const char *, std::size_t >{ "nx", dims.nx }, { "ny", dims.ny }, { "nz", dims.nz } } ) {
			if( value % divider != 0 ) {
				throw InvalidArgument( std::string( "build_hierarchy: dimension " ) + name + " = "
					+ std::to_string( value ) + " is not divisible by 2^(levels-1) = " + std::to_string( divider ) );
			}
			if( value / divider < 2 ) {
				throw InvalidArgument( std::string( "build_hierarchy: dimension " ) + name + " = "
					+ std::to_string( value ) + " becomes smaller than 2 after " + std::to_string( levels - 1 )
					+ " halvings" );
			}
		}

		std::vector< ProblemLevel > chain;
		chain.reserve( levels );
		GridDims level_dims = dims;
		for( std::size_t k = 0; k < levels; ++k ) {
			chain.emplace_back( level_dims, build_matrix( level_dims ) );
			if( k + 1 < levels ) {
				chain.back().restriction = build_restriction( level_dims );
				level_dims = GridDims{ level_dims.nx / 2, level_dims.ny / 2, level_dims.nz / 2 };
				chain.back().r_c = DenseVector( level_dims.n() );
				chain.back().z_c = DenseVector( level_dims.n() );
			}
		}
		for( std::size_t k = levels - 1; k > 0; --k ) {
			chain[ k - 1 ].coarser = std::make_unique< ProblemLevel >( std::move( chain[ k ] ) );
		}
		return std::move( chain.front() );
	}

} // namespace slab
