
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
 * @file coloring.hpp
 * Greedy distance-1 coloring of a matrix adjacency structure. The color
 * classes are what let the multicolor Gauss-Seidel smoother update whole
 * index sets in parallel: two indices sharing a color never share a stored
 * off-diagonal entry.
 */

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "index_mask.hpp"
#include "sparse_matrix.hpp"

namespace slab {

	/** Partition of [0, n) into per-color index masks, ordered by color. */
	struct Coloring {
		std::size_t num_colors = 0;
		std::vector< IndexMask > masks;
	};

	/** Verdict of validate_coloring, carrying the first violation found. */
	struct ColoringValidity {
		bool valid = true;
		std::string reason;
		std::optional< std::pair< std::size_t, std::size_t > > violating_edge;

		explicit operator bool() const noexcept {
			return valid;
		}
	};

	namespace detail {

		// pattern of A union A^T as CSR offsets/indices, diagonal excluded
		inline void symmetrized_pattern( const SparseMatrix & A, std::vector< std::size_t > & offsets,
			std::vector< std::size_t > & neighbors ) {
			const std::size_t n = A.nrows();
			const SparseMatrix At = transpose_explicit( A );
			offsets.assign( n + 1, 0 );
			// merged row sizes first, then a second pass to fill
			for( int pass = 0; pass < 2; ++pass ) {
				for( std::size_t i = 0; i < n; ++i ) {
					const auto a = A.row_cols( i );
					const auto b = At.row_cols( i );
					std::size_t ka = 0, kb = 0, count = 0;
					while( ka < a.size() || kb < b.size() ) {
						std::size_t next;
						if( kb == b.size() || ( ka < a.size() && a[ ka ] < b[ kb ] ) ) {
							next = a[ ka++ ];
						} else if( ka == a.size() || b[ kb ] < a[ ka ] ) {
							next = b[ kb++ ];
						} else {
							next = a[ ka ];
							++ka;
							++kb;
						}
						if( next == i ) {
							continue;
						}
						if( pass == 1 ) {
							neighbors[ offsets[ i ] + count ] = next;
						}
						++count;
					}
					if( pass == 0 ) {
						offsets[ i + 1 ] = count;
					}
				}
				if( pass == 0 ) {
					for( std::size_t i = 0; i < n; ++i ) {
						offsets[ i + 1 ] += offsets[ i ];
					}
					neighbors.resize( offsets[ n ] );
				}
			}
		}

	} // namespace detail

	/**
	 * Greedy coloring over the structure of A united with its transpose, so
	 * non-symmetric patterns are handled too. Rows are visited in increasing
	 * index order and each receives the smallest color unused by any already
	 * colored structural neighbor; the result is a pure function of A's
	 * pattern. On the 27-point stencil grids this finds exactly eight colors,
	 * the parity classes of the grid coordinates.
	 */
	inline Coloring greedy_color( const SparseMatrix & A ) {
		if( A.nrows() != A.ncols() ) {
			throw DimensionMismatch( "greedy_color: matrix must be square" );
		}
		const std::size_t n = A.nrows();
		constexpr std::size_t unset = std::numeric_limits< std::size_t >::max();

		std::vector< std::size_t > offsets, neighbors;
		detail::symmetrized_pattern( A, offsets, neighbors );

		std::size_t max_degree = 0;
		for( std::size_t i = 0; i < n; ++i ) {
			max_degree = std::max( max_degree, offsets[ i + 1 ] - offsets[ i ] );
		}

		std::vector< std::size_t > color( n, unset );
		std::vector< std::size_t > forbidden_at( max_degree + 1, unset ); // stamped with the row that forbade the color
		std::size_t num_colors = 0;
		for( std::size_t i = 0; i < n; ++i ) {
			for( std::size_t k = offsets[ i ]; k < offsets[ i + 1 ]; ++k ) {
				const std::size_t c = color[ neighbors[ k ] ];
				if( c != unset ) {
					forbidden_at[ c ] = i;
				}
			}
			std::size_t chosen = 0;
			while( forbidden_at[ chosen ] == i ) {
				++chosen;
			}
			color[ i ] = chosen;
			num_colors = std::max( num_colors, chosen + 1 );
		}

		std::vector< std::vector< std::size_t > > buckets( num_colors );
		for( std::size_t i = 0; i < n; ++i ) {
			buckets[ color[ i ] ].push_back( i ); // ascending i keeps members sorted
		}
		Coloring out;
		out.num_colors = num_colors;
		out.masks.reserve( num_colors );
		for( std::vector< std::size_t > & bucket : buckets ) {
			out.masks.emplace_back( n, std::move( bucket ) );
		}
		return out;
	}

	/**
	 * Checks that the masks partition [0, n) and that no stored off-diagonal
	 * of A connects two indices of the same color. Returns the first violation
	 * instead of throwing.
	 */
	inline ColoringValidity validate_coloring( const SparseMatrix & A, const Coloring & coloring ) {
		if( A.nrows() != A.ncols() ) {
			return { false, "matrix is not square", std::nullopt };
		}
		const std::size_t n = A.nrows();
		constexpr std::size_t unset = std::numeric_limits< std::size_t >::max();

		if( coloring.num_colors != coloring.masks.size() ) {
			return { false, "num_colors disagrees with the mask count", std::nullopt };
		}
		std::vector< std::size_t > owner( n, unset );
		for( std::size_t k = 0; k < coloring.masks.size(); ++k ) {
			const IndexMask & mask = coloring.masks[ k ];
			if( mask.universe_size() != n ) {
				return { false, "mask universe differs from matrix size", std::nullopt };
			}
			for( const std::size_t m : mask.members() ) {
				if( owner[ m ] != unset ) {
					return { false, "index " + std::to_string( m ) + " appears in more than one color", std::nullopt };
				}
				owner[ m ] = k;
			}
		}
		for( std::size_t i = 0; i < n; ++i ) {
			if( owner[ i ] == unset ) {
				return { false, "index " + std::to_string( i ) + " has no color", std::nullopt };
			}
		}
		for( std::size_t i = 0; i < n; ++i ) {
			for( const std::size_t j : A.row_cols( i ) ) {
				if( j != i && owner[ i ] == owner[ j ] ) {
					return { false,
						"indices " + std::to_string( i ) + " and " + std::to_string( j ) + " share color "
							+ std::to_string( owner[ i ] ),
						std::make_pair( i, j ) };
				}
			}
		}
		return {};
	}

} // namespace slab
