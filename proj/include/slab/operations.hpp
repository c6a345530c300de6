
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
 * @file operations.hpp
 * The primitive layer: every numerical kernel in this repository is written
 * in terms of the operations below and nothing else.
 *
 * Determinism contract: each output element is produced by exactly one fixed
 * summation order, and reductions combine fixed-size chunks in chunk order.
 * Outputs are therefore bit-identical across runs and across thread counts.
 *
 * Concurrency contract: containers are immutable while any operation reads
 * them, and an operation has exclusive access to its output. Operations
 * parallelize internally over rows or mask members; callers need no further
 * synchronization beyond the exclusive-output rule.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "dense_vector.hpp"
#include "descriptor.hpp"
#include "error.hpp"
#include "index_mask.hpp"
#include "parallel.hpp"
#include "semiring.hpp"
#include "sparse_matrix.hpp"

namespace slab {

	/** Sets every element of v to the given value. */
	inline DenseVector & set_all( DenseVector & v, double value ) {
		detail::parallel_for( v.size(), [ &v, value ]( std::size_t i ) {
			v[ i ] = value;
		} );
		return v;
	}

	/**
	 * Dot product with a deterministic reduction: the input is cut into
	 * fixed-length chunks, each chunk is summed left to right, and the partial
	 * sums combine in chunk order regardless of how many threads ran.
	 */
	template< class Ring = PlusTimes >
	inline double dot( const DenseVector & x, const DenseVector & y, Ring ring = {} ) {
		if( x.size() != y.size() ) {
			throw DimensionMismatch( "dot: vector lengths differ" );
		}
		const std::size_t n = x.size();
		const std::size_t chunk = detail::reduction_chunk;
		const std::size_t nchunks = ( n + chunk - 1 ) / chunk;
		if( nchunks <= 1 ) {
			double acc = ring.zero();
			for( std::size_t i = 0; i < n; ++i ) {
				acc = ring.add( acc, ring.mul( x[ i ], y[ i ] ) );
			}
			return acc;
		}
		std::vector< double > partials( nchunks );
		detail::parallel_for( nchunks, [ & ]( std::size_t c ) {
			const std::size_t begin = c * chunk;
			const std::size_t end = begin + chunk < n ? begin + chunk : n;
			double acc = ring.zero();
			for( std::size_t i = begin; i < end; ++i ) {
				acc = ring.add( acc, ring.mul( x[ i ], y[ i ] ) );
			}
			partials[ c ] = acc;
		} );
		double acc = ring.zero();
		for( const double p : partials ) {
			acc = ring.add( acc, p );
		}
		return acc;
	}

	/**
	 * w[i] = alpha*x[i] + beta*y[i]. The output may alias either input; all
	 * three lengths must agree.
	 */
	inline DenseVector & waxpby( DenseVector & w, double alpha, const DenseVector & x, double beta,
		const DenseVector & y ) {
		if( w.size() != x.size() || x.size() != y.size() ) {
			throw DimensionMismatch( "waxpby: vector lengths differ" );
		}
		detail::parallel_for( w.size(), [ & ]( std::size_t i ) {
			w[ i ] = alpha * x[ i ] + beta * y[ i ];
		} );
		return w;
	}

	namespace detail {

		inline void check_bound_vector( const IndexMask & mask, const DenseVector & v ) {
			if( v.size() != mask.universe_size() ) {
				throw DimensionMismatch( "apply_masked: bound vector length differs from mask universe" );
			}
		}

		template< class Ring >
		inline double row_dot( const SparseMatrix & A, std::size_t row, const DenseVector & x, const Ring & ring ) {
			const auto cols = A.row_cols( row );
			const auto vals = A.row_values( row );
			double acc = ring.zero();
			for( std::size_t k = 0; k < cols.size(); ++k ) {
				acc = ring.add( acc, ring.mul( vals[ k ], x[ cols[ k ] ] ) );
			}
			return acc;
		}

	} // namespace detail

	/**
	 * Runs body(i) exactly once for every mask member i, in any order and
	 * possibly concurrently. Every vector the body reads or writes must be
	 * passed as a bound argument so its length can be checked against the mask
	 * universe. Contract (unchecked): the body for index i touches only
	 * position i of the bound vectors, and does not throw.
	 */
	template< class Body, class... Bound >
	inline void apply_masked( const IndexMask & mask, Body && body, Bound &... bound ) {
		( detail::check_bound_vector( mask, bound ), ... );
		const auto members = mask.members();
		detail::parallel_for( members.size(), [ & ]( std::size_t k ) {
			body( members[ k ] );
		} );
	}

	namespace detail {

		template< class Ring >
		inline void mxv_checked( DenseVector & y, const IndexMask * mask, const SparseMatrix & A,
			const DenseVector & x, Descriptor desc, const Ring & ring ) {
			const std::size_t out_len = desc.transpose_matrix ? A.ncols() : A.nrows();
			const std::size_t in_len = desc.transpose_matrix ? A.nrows() : A.ncols();
			if( y.size() != out_len || x.size() != in_len ) {
				throw DimensionMismatch( "mxv: operand sizes do not match the matrix" );
			}
			if( mask != nullptr && mask->universe_size() != out_len ) {
				throw DimensionMismatch( "mxv: mask universe differs from output length" );
			}
			if( &y == &x ) {
				throw InvalidArgument( "mxv: output must not alias the input vector" );
			}

			if( !desc.transpose_matrix ) {
				// gather form: each output row sums its stored entries in column order
				if( mask == nullptr ) {
					parallel_for( A.nrows(), [ & ]( std::size_t i ) {
						y[ i ] = row_dot( A, i, x, ring );
					} );
				} else {
					const auto members = mask->members();
					parallel_for( members.size(), [ & ]( std::size_t k ) {
						const std::size_t i = members[ k ];
						y[ i ] = row_dot( A, i, x, ring );
					} );
				}
				return;
			}

			// transpose form: scatter A's rows in order, accumulating per output
			// position; runs serially so the accumulation order stays fixed
			if( mask == nullptr ) {
				set_all( y, ring.zero() );
				for( std::size_t i = 0; i < A.nrows(); ++i ) {
					const auto cols = A.row_cols( i );
					const auto vals = A.row_values( i );
					for( std::size_t k = 0; k < cols.size(); ++k ) {
						y[ cols[ k ] ] = ring.add( y[ cols[ k ] ], ring.mul( vals[ k ], x[ i ] ) );
					}
				}
			} else {
				std::vector< char > selected( out_len, 0 );
				for( const std::size_t m : mask->members() ) {
					selected[ m ] = 1;
					y[ m ] = ring.zero();
				}
				for( std::size_t i = 0; i < A.nrows(); ++i ) {
					const auto cols = A.row_cols( i );
					const auto vals = A.row_values( i );
					for( std::size_t k = 0; k < cols.size(); ++k ) {
						if( selected[ cols[ k ] ] ) {
							y[ cols[ k ] ] = ring.add( y[ cols[ k ] ], ring.mul( vals[ k ], x[ i ] ) );
						}
					}
				}
			}
		}

	} // namespace detail

	/**
	 * y[i] = sum_j A'[i,j]*x[j] for every output position i, where A' is A or
	 * its transpose per the descriptor.
	 */
	template< class Ring = PlusTimes >
	inline DenseVector & mxv( DenseVector & y, const SparseMatrix & A, const DenseVector & x, Descriptor desc = {},
		Ring ring = {} ) {
		detail::mxv_checked( y, nullptr, A, x, desc, ring );
		return y;
	}

	/**
	 * Masked variant: computes y[i] only for mask members and leaves every
	 * other output position untouched. The mask is structural — only its
	 * pattern matters.
	 */
	template< class Ring = PlusTimes >
	inline DenseVector & mxv( DenseVector & y, const IndexMask & mask, const SparseMatrix & A, const DenseVector & x,
		Descriptor desc = {}, Ring ring = {} ) {
		detail::mxv_checked( y, &mask, A, x, desc, ring );
		return y;
	}

} // namespace slab
