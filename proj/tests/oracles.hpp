
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
 * @file oracles.hpp
 * Test-only reference implementations, kept deliberately naive and
 * independent of the kernels under test: dense linear algebra, a scalar
 * Gauss-Seidel sweep, brute-force grid enumerations, and small random
 * fixtures.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include <slab/slab.hpp>

namespace oracles {

	using slab::DenseVector;
	using slab::GridDims;
	using slab::SparseMatrix;

	using Dense = std::vector< std::vector< double > >;

	inline Dense dense_from_sparse( const SparseMatrix & A ) {
		Dense M( A.nrows(), std::vector< double >( A.ncols(), 0.0 ) );
		for( std::size_t i = 0; i < A.nrows(); ++i ) {
			const auto cols = A.row_cols( i );
			const auto vals = A.row_values( i );
			for( std::size_t k = 0; k < cols.size(); ++k ) {
				M[ i ][ cols[ k ] ] = vals[ k ];
			}
		}
		return M;
	}

	inline std::vector< double > dense_mxv( const Dense & M, const std::vector< double > & x ) {
		std::vector< double > y( M.size(), 0.0 );
		for( std::size_t i = 0; i < M.size(); ++i ) {
			for( std::size_t j = 0; j < x.size(); ++j ) {
				y[ i ] += M[ i ][ j ] * x[ j ];
			}
		}
		return y;
	}

	/** Gaussian elimination with partial pivoting; M must be square and regular. */
	inline std::vector< double > lu_solve( Dense M, std::vector< double > rhs ) {
		const std::size_t n = rhs.size();
		for( std::size_t k = 0; k < n; ++k ) {
			std::size_t pivot = k;
			for( std::size_t i = k + 1; i < n; ++i ) {
				if( std::abs( M[ i ][ k ] ) > std::abs( M[ pivot ][ k ] ) ) {
					pivot = i;
				}
			}
			std::swap( M[ k ], M[ pivot ] );
			std::swap( rhs[ k ], rhs[ pivot ] );
			for( std::size_t i = k + 1; i < n; ++i ) {
				const double f = M[ i ][ k ] / M[ k ][ k ];
				for( std::size_t j = k; j < n; ++j ) {
					M[ i ][ j ] -= f * M[ k ][ j ];
				}
				rhs[ i ] -= f * rhs[ k ];
			}
		}
		std::vector< double > x( n, 0.0 );
		for( std::size_t i = n; i > 0; --i ) {
			double sum = rhs[ i - 1 ];
			for( std::size_t j = i; j < n; ++j ) {
				sum -= M[ i - 1 ][ j ] * x[ j ];
			}
			x[ i - 1 ] = sum / M[ i - 1 ][ i - 1 ];
		}
		return x;
	}

	/**
	 * Scalar Gauss-Seidel update of one index, spelled with the same diagonal
	 * add-back expression and stored-column summation order as the production
	 * smoother, so sweeps can be compared bitwise.
	 */
	inline void scalar_gs_update( const SparseMatrix & A, DenseVector & z, const DenseVector & r, std::size_t i ) {
		const auto cols = A.row_cols( i );
		const auto vals = A.row_values( i );
		double s = 0.0;
		double d = 0.0;
		for( std::size_t k = 0; k < cols.size(); ++k ) {
			s += vals[ k ] * z[ cols[ k ] ];
			if( cols[ k ] == i ) {
				d = vals[ k ];
			}
		}
		z[ i ] = ( r[ i ] - s + z[ i ] * d ) / d;
	}

	/** Sequential scalar sweep processing the given index order one by one. */
	inline void scalar_gs_sweep( const SparseMatrix & A, DenseVector & z, const DenseVector & r,
		const std::vector< std::size_t > & order ) {
		for( const std::size_t i : order ) {
			scalar_gs_update( A, z, r, i );
		}
	}

	/** Flattened color-then-index order of a coloring. */
	inline std::vector< std::size_t > color_order( const slab::Coloring & coloring, bool reversed_colors = false ) {
		std::vector< std::size_t > order;
		for( std::size_t k = 0; k < coloring.masks.size(); ++k ) {
			const std::size_t mask = reversed_colors ? coloring.masks.size() - 1 - k : k;
			const auto members = coloring.masks[ mask ].members();
			order.insert( order.end(), members.begin(), members.end() );
		}
		return order;
	}

	/** sqrt(e' A e) via plain scalar loops. */
	inline double a_norm( const SparseMatrix & A, const std::vector< double > & e ) {
		double acc = 0.0;
		for( std::size_t i = 0; i < A.nrows(); ++i ) {
			const auto cols = A.row_cols( i );
			const auto vals = A.row_values( i );
			double row = 0.0;
			for( std::size_t k = 0; k < cols.size(); ++k ) {
				row += vals[ k ] * e[ cols[ k ] ];
			}
			acc += e[ i ] * row;
		}
		return std::sqrt( acc );
	}

	/** Counts 3x3x3 in-grid neighborhood memberships point by point. */
	inline std::size_t brute_force_stencil_nnz( const GridDims & dims ) {
		std::size_t count = 0;
		for( std::size_t iz = 0; iz < dims.nz; ++iz ) {
			for( std::size_t iy = 0; iy < dims.ny; ++iy ) {
				for( std::size_t ix = 0; ix < dims.nx; ++ix ) {
					for( long dz = -1; dz <= 1; ++dz ) {
						for( long dy = -1; dy <= 1; ++dy ) {
							for( long dx = -1; dx <= 1; ++dx ) {
								const long jx = static_cast< long >( ix ) + dx;
								const long jy = static_cast< long >( iy ) + dy;
								const long jz = static_cast< long >( iz ) + dz;
								if( jx >= 0 && jy >= 0 && jz >= 0 && jx < static_cast< long >( dims.nx )
									&& jy < static_cast< long >( dims.ny ) && jz < static_cast< long >( dims.nz ) ) {
									++count;
								}
							}
						}
					}
				}
			}
		}
		return count;
	}

	/**
	 * Face-halo count by walking the local block: one tick per (point, axis
	 * direction) pair whose face neighbor falls outside the block.
	 */
	inline std::size_t brute_force_halo( const GridDims & dims, const slab::NodeGrid & grid ) {
		const long sx = static_cast< long >( dims.nx / grid.px );
		const long sy = static_cast< long >( dims.ny / grid.py );
		const long sz = static_cast< long >( dims.nz / grid.pz );
		const long steps[ 6 ][ 3 ] = {
			{ 1, 0, 0 }, { -1, 0, 0 }, { 0, 1, 0 }, { 0, -1, 0 }, { 0, 0, 1 }, { 0, 0, -1 }
		};
		std::size_t count = 0;
		for( long z = 0; z < sz; ++z ) {
			for( long y = 0; y < sy; ++y ) {
				for( long x = 0; x < sx; ++x ) {
					for( const auto & step : steps ) {
						const long jx = x + step[ 0 ], jy = y + step[ 1 ], jz = z + step[ 2 ];
						if( jx < 0 || jy < 0 || jz < 0 || jx >= sx || jy >= sy || jz >= sz ) {
							++count;
						}
					}
				}
			}
		}
		return count;
	}

	/** All node grids whose factors divide the dims, in lexicographic order. */
	inline std::vector< slab::NodeGrid > all_node_grids( const GridDims & dims ) {
		std::vector< slab::NodeGrid > grids;
		for( std::size_t px = 1; px <= dims.nx; ++px ) {
			if( dims.nx % px != 0 ) {
				continue;
			}
			for( std::size_t py = 1; py <= dims.ny; ++py ) {
				if( dims.ny % py != 0 ) {
					continue;
				}
				for( std::size_t pz = 1; pz <= dims.nz; ++pz ) {
					if( dims.nz % pz == 0 ) {
						grids.push_back( { px, py, pz } );
					}
				}
			}
		}
		return grids;
	}

	/** Fisher-Yates shuffle driven by the library's LCG. */
	inline void shuffle( std::vector< std::size_t > & values, slab::Lcg64 & rng ) {
		for( std::size_t i = values.size(); i > 1; --i ) {
			const std::size_t j = rng.next_u64() % i;
			std::swap( values[ i - 1 ], values[ j ] );
		}
	}

	/** 1D 3-point Laplacian: diag 2, off-diagonals -1. */
	inline SparseMatrix make_tridiag( std::size_t n, double diag = 2.0, double off = -1.0 ) {
		std::vector< slab::Triplet > t;
		for( std::size_t i = 0; i < n; ++i ) {
			if( i > 0 ) {
				t.push_back( { i, i - 1, off } );
			}
			t.push_back( { i, i, diag } );
			if( i + 1 < n ) {
				t.push_back( { i, i + 1, off } );
			}
		}
		return SparseMatrix::from_triplets( n, n, std::move( t ) );
	}

	/**
	 * Random matrix with symmetric pattern: every off-diagonal edge is stored
	 * in both directions, plus a full diagonal.
	 */
	inline SparseMatrix random_symmetric_structure( std::size_t n, std::size_t target_edges, slab::Lcg64 & rng ) {
		std::set< std::pair< std::size_t, std::size_t > > edges;
		for( std::size_t attempt = 0; attempt < 4 * target_edges; ++attempt ) {
			if( edges.size() >= target_edges ) {
				break;
			}
			const std::size_t i = rng.next_u64() % n;
			const std::size_t j = rng.next_u64() % n;
			if( i != j ) {
				edges.insert( { std::min( i, j ), std::max( i, j ) } );
			}
		}
		std::vector< slab::Triplet > t;
		for( std::size_t i = 0; i < n; ++i ) {
			t.push_back( { i, i, 8.0 } );
		}
		for( const auto & [ i, j ] : edges ) {
			t.push_back( { i, j, -1.0 } );
			t.push_back( { j, i, -1.0 } );
		}
		return SparseMatrix::from_triplets( n, n, std::move( t ) );
	}

	inline std::vector< double > to_std( const DenseVector & v ) {
		return { v.values().begin(), v.values().end() };
	}

	inline DenseVector to_vec( std::vector< double > v ) {
		return DenseVector::from( std::move( v ) );
	}

} // namespace oracles
