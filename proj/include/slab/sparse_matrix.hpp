
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

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace slab {

	struct Triplet {
		std::size_t row = 0;
		std::size_t col = 0;
		double value = 0.0;
	};

	/**
	 * Compressed-sparse-row matrix over 64-bit reals.
	 *
	 * Invariants, enforced at every construction path:
	 *  - row_offsets has nrows+1 entries, is non-decreasing, starts at 0 and
	 *    ends at nnz;
	 *  - within each row the column indices are strictly increasing and below
	 *    ncols, so there are no duplicate coordinates.
	 *
	 * Instances are immutable after construction; kernels only ever read them.
	 */
	class SparseMatrix {
	public:
		SparseMatrix() = default;

		/**
		 * Builds a CSR matrix from coordinate triplets in any order.
		 *
		 * Duplicate (row, col) pairs are rejected rather than accumulated: the
		 * generators in this repository never produce duplicates, so one is
		 * always a bug worth failing on.
		 */
		static SparseMatrix from_triplets( std::size_t nrows, std::size_t ncols, std::vector< Triplet > triplets ) {
			for( const Triplet & t : triplets ) {
				if( t.row >= nrows || t.col >= ncols ) {
					throw InvalidArgument( "from_triplets: coordinate (" + std::to_string( t.row ) + ", "
						+ std::to_string( t.col ) + ") out of range" );
				}
			}
			std::sort( triplets.begin(), triplets.end(), []( const Triplet & a, const Triplet & b ) {
				return a.row != b.row ? a.row < b.row : a.col < b.col;
			} );
			for( std::size_t k = 1; k < triplets.size(); ++k ) {
				if( triplets[ k ].row == triplets[ k - 1 ].row && triplets[ k ].col == triplets[ k - 1 ].col ) {
					throw InvalidArgument( "from_triplets: duplicate coordinate (" + std::to_string( triplets[ k ].row )
						+ ", " + std::to_string( triplets[ k ].col ) + ")" );
				}
			}

			SparseMatrix A;
			A.nrows_ = nrows;
			A.ncols_ = ncols;
			A.row_offsets_.assign( nrows + 1, 0 );
			A.col_indices_.reserve( triplets.size() );
			A.values_.reserve( triplets.size() );
			for( const Triplet & t : triplets ) {
				++A.row_offsets_[ t.row + 1 ];
			}
			for( std::size_t i = 0; i < nrows; ++i ) {
				A.row_offsets_[ i + 1 ] += A.row_offsets_[ i ];
			}
			for( const Triplet & t : triplets ) {
				A.col_indices_.push_back( t.col );
				A.values_.push_back( t.value );
			}
			return A;
		}

		/** Adopts raw CSR arrays after validating every container invariant. */
		static SparseMatrix from_csr( std::size_t nrows, std::size_t ncols, std::vector< std::size_t > row_offsets,
			std::vector< std::size_t > col_indices, std::vector< double > values ) {
			if( row_offsets.size() != nrows + 1 || row_offsets.front() != 0 ) {
				throw InvalidArgument( "from_csr: row_offsets must have nrows+1 entries starting at 0" );
			}
			if( row_offsets.back() != col_indices.size() || col_indices.size() != values.size() ) {
				throw InvalidArgument( "from_csr: offsets, column and value arrays disagree on nnz" );
			}
			for( std::size_t i = 0; i < nrows; ++i ) {
				if( row_offsets[ i + 1 ] < row_offsets[ i ] ) {
					throw InvalidArgument( "from_csr: row_offsets must be non-decreasing" );
				}
				for( std::size_t k = row_offsets[ i ]; k < row_offsets[ i + 1 ]; ++k ) {
					if( col_indices[ k ] >= ncols ) {
						throw InvalidArgument( "from_csr: column index out of range in row " + std::to_string( i ) );
					}
					if( k > row_offsets[ i ] && col_indices[ k ] <= col_indices[ k - 1 ] ) {
						throw InvalidArgument( "from_csr: columns must be strictly increasing in row " + std::to_string( i ) );
					}
				}
			}
			SparseMatrix A;
			A.nrows_ = nrows;
			A.ncols_ = ncols;
			A.row_offsets_ = std::move( row_offsets );
			A.col_indices_ = std::move( col_indices );
			A.values_ = std::move( values );
			return A;
		}

		std::size_t nrows() const noexcept {
			return nrows_;
		}
		std::size_t ncols() const noexcept {
			return ncols_;
		}
		std::size_t nnz() const noexcept {
			return values_.size();
		}

		std::span< const std::size_t > row_offsets() const noexcept {
			return row_offsets_;
		}
		std::span< const std::size_t > col_indices() const noexcept {
			return col_indices_;
		}
		std::span< const double > values() const noexcept {
			return values_;
		}

		std::span< const std::size_t > row_cols( std::size_t i ) const noexcept {
			return { col_indices_.data() + row_offsets_[ i ], row_offsets_[ i + 1 ] - row_offsets_[ i ] };
		}
		std::span< const double > row_values( std::size_t i ) const noexcept {
			return { values_.data() + row_offsets_[ i ], row_offsets_[ i + 1 ] - row_offsets_[ i ] };
		}

		/** Stored nonzeros of one row as triplets, in column order. */
		std::vector< Triplet > row_triplets( std::size_t i ) const {
			std::vector< Triplet > out;
			const auto cols = row_cols( i );
			const auto vals = row_values( i );
			out.reserve( cols.size() );
			for( std::size_t k = 0; k < cols.size(); ++k ) {
				out.push_back( { i, cols[ k ], vals[ k ] } );
			}
			return out;
		}

	private:
		std::size_t nrows_ = 0;
		std::size_t ncols_ = 0;
		std::vector< std::size_t > row_offsets_{ 0 };
		std::vector< std::size_t > col_indices_;
		std::vector< double > values_;
	};

	/**
	 * Materializes the transpose as a new CSR matrix. The kernels never need
	 * this (they take a transpose descriptor instead); it exists as the
	 * independent reference path for that descriptor and for test tooling.
	 */
	inline SparseMatrix transpose_explicit( const SparseMatrix & A ) {
		const std::size_t tn = A.ncols();
		std::vector< std::size_t > offsets( tn + 1, 0 );
		for( const std::size_t c : A.col_indices() ) {
			++offsets[ c + 1 ];
		}
		for( std::size_t i = 0; i < tn; ++i ) {
			offsets[ i + 1 ] += offsets[ i ];
		}
		std::vector< std::size_t > cols( A.nnz() );
		std::vector< double > vals( A.nnz() );
		std::vector< std::size_t > cursor( offsets.begin(), offsets.end() - 1 );
		for( std::size_t i = 0; i < A.nrows(); ++i ) {
			const auto rc = A.row_cols( i );
			const auto rv = A.row_values( i );
			for( std::size_t k = 0; k < rc.size(); ++k ) {
				const std::size_t at = cursor[ rc[ k ] ]++;
				cols[ at ] = i;
				vals[ at ] = rv[ k ];
			}
		}
		return SparseMatrix::from_csr( tn, A.nrows(), std::move( offsets ), std::move( cols ), std::move( vals ) );
	}

} // namespace slab
