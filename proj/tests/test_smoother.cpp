
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

#include <catch2/catch.hpp>

#include <cmath>

#include <slab/slab.hpp>

#include "oracles.hpp"

using namespace slab;

namespace {

	SparseMatrix identity( std::size_t n ) {
		std::vector< Triplet > t;
		for( std::size_t i = 0; i < n; ++i ) {
			t.push_back( { i, i, 1.0 } );
		}
		return SparseMatrix::from_triplets( n, n, std::move( t ) );
	}

} // namespace

TEST_CASE( "one sweep on the identity solves exactly", "[smoother]" ) {
	ProblemLevel level( identity( 5 ) );
	REQUIRE( level.colors.num_colors == 1 );
	Lcg64 rng( 1 );
	const DenseVector r = random_vector( 5, rng );
	DenseVector z( 5, 0.0 );
	rbgs_forward( level, z, r );
	CHECK( z == r );

	set_all( z, 0.0 );
	rbgs_backward( level, z, r );
	CHECK( z == r );
}

TEST_CASE( "forward sweep equals the sequential scalar oracle in color order", "[smoother]" ) {
	set_max_threads( 1 );
	for( std::size_t n : { 4, 9, 16 } ) {
		ProblemLevel level( oracles::make_tridiag( n ) );
		Lcg64 rng( 7 + n );
		const DenseVector r = random_vector( n, rng );
		DenseVector z = random_vector( n, rng );
		DenseVector expected = z;

		rbgs_forward( level, z, r );
		oracles::scalar_gs_sweep( level.A, expected, r, oracles::color_order( level.colors ) );
		CHECK( z == expected ); // bitwise, serial execution
	}
	set_max_threads( 0 );
}

TEST_CASE( "forward sweep on the 4^3 stencil matches the oracle bitwise", "[smoother]" ) {
	set_max_threads( 1 );
	ProblemLevel level( build_matrix( { 4, 4, 4 } ) );
	REQUIRE( level.colors.num_colors == 8 );
	REQUIRE( level.colors.masks[ 0 ].members()[ 0 ] == 0 );
	Lcg64 rng( 42 );
	const DenseVector r = random_vector( level.n(), rng );
	DenseVector z = random_vector( level.n(), rng );
	DenseVector expected = z;

	rbgs_forward( level, z, r );
	oracles::scalar_gs_sweep( level.A, expected, r, oracles::color_order( level.colors ) );
	CHECK( z == expected );
	set_max_threads( 0 );
}

TEST_CASE( "backward sweep matches the oracle with reversed colors", "[smoother]" ) {
	set_max_threads( 1 );
	ProblemLevel level( oracles::make_tridiag( 4 ) );
	Lcg64 rng( 5 );
	const DenseVector r = random_vector( 4, rng );
	DenseVector z = random_vector( 4, rng );
	DenseVector expected = z;

	rbgs_backward( level, z, r );
	oracles::scalar_gs_sweep( level.A, expected, r, oracles::color_order( level.colors, true ) );
	CHECK( z == expected );
	set_max_threads( 0 );
}

TEST_CASE( "the exact solution is a fixed point of every sweep", "[smoother]" ) {
	ProblemLevel level( build_matrix( { 2, 2, 2 } ) );
	Lcg64 rng( 11 );
	const auto dense = oracles::dense_from_sparse( level.A );
	const DenseVector r = random_vector( 8, rng );
	const std::vector< double > exact = oracles::lu_solve( dense, oracles::to_std( r ) );

	DenseVector z = oracles::to_vec( exact );
	rbgs_symmetric( level, z, r );
	for( std::size_t i = 0; i < 8; ++i ) {
		CHECK( z[ i ] == Approx( exact[ i ] ).epsilon( 1e-14 ) );
	}
}

TEST_CASE( "intra-color processing order is irrelevant", "[smoother]" ) {
	set_max_threads( 1 );
	ProblemLevel level( build_matrix( { 4, 4, 4 } ) );
	Lcg64 rng( 13 );
	const DenseVector r = random_vector( level.n(), rng );
	DenseVector z = random_vector( level.n(), rng );
	DenseVector scripted = z;

	rbgs_forward( level, z, r );

	// same update, but each color's members processed in a shuffled order
	for( const IndexMask & mask : level.colors.masks ) {
		std::vector< std::size_t > order( mask.members().begin(), mask.members().end() );
		oracles::shuffle( order, rng );
		oracles::scalar_gs_sweep( level.A, scripted, r, order );
	}
	CHECK( z == scripted ); // bitwise
	set_max_threads( 0 );
}

TEST_CASE( "symmetric sweep is forward then backward, repeated", "[smoother]" ) {
	ProblemLevel level( build_matrix( { 2, 2, 4 } ) );
	Lcg64 rng( 17 );
	const DenseVector r = random_vector( level.n(), rng );

	DenseVector composed( level.n(), 0.0 );
	rbgs_forward( level, composed, r );
	rbgs_backward( level, composed, r );

	DenseVector direct( level.n(), 0.0 );
	rbgs_symmetric( level, direct, r );
	CHECK( direct == composed );

	DenseVector two_calls( level.n(), 0.0 );
	rbgs_symmetric( level, two_calls, r );
	rbgs_symmetric( level, two_calls, r );
	DenseVector two_sweeps( level.n(), 0.0 );
	rbgs_symmetric( level, two_sweeps, r, SmootherConfig{ 2 } );
	CHECK( two_sweeps == two_calls );

	CHECK_THROWS_AS( rbgs_symmetric( level, direct, r, SmootherConfig{ 0 } ), InvalidArgument );
}

TEST_CASE( "smoothing error never grows in the A-norm", "[smoother]" ) {
	ProblemLevel level( build_matrix( { 4, 4, 4 } ) );
	const DenseVector r = build_rhs( { 4, 4, 4 } );
	const std::vector< double > exact = oracles::lu_solve( oracles::dense_from_sparse( level.A ), oracles::to_std( r ) );

	DenseVector z( level.n(), 0.0 );
	double previous = -1.0;
	for( int sweep = 0; sweep < 5; ++sweep ) {
		rbgs_symmetric( level, z, r );
		std::vector< double > err = oracles::to_std( z );
		for( std::size_t i = 0; i < err.size(); ++i ) {
			err[ i ] -= exact[ i ];
		}
		const double a_norm = oracles::a_norm( level.A, err );
		if( previous >= 0.0 ) {
			CHECK( a_norm <= previous * ( 1.0 + 1e-12 ) );
		}
		previous = a_norm;
	}
}

TEST_CASE( "sweep from zero is linear in the right-hand side", "[smoother]" ) {
	ProblemLevel level( build_matrix( { 4, 4, 4 } ) );
	Lcg64 rng( 19 );
	const DenseVector r1 = random_vector( level.n(), rng );
	const DenseVector r2 = random_vector( level.n(), rng );
	const double alpha = 3.25;

	DenseVector scaled_r( level.n() );
	waxpby( scaled_r, alpha, r1, 0.0, r1 );
	DenseVector z_scaled( level.n(), 0.0 );
	rbgs_forward( level, z_scaled, scaled_r );
	DenseVector z_base( level.n(), 0.0 );
	rbgs_forward( level, z_base, r1 );
	for( std::size_t i = 0; i < level.n(); ++i ) {
		CHECK( z_scaled[ i ] == Approx( alpha * z_base[ i ] ).epsilon( 1e-12 ).margin( 1e-300 ) );
	}

	DenseVector summed_r( level.n() );
	waxpby( summed_r, 1.0, r1, 1.0, r2 );
	DenseVector z_sum( level.n(), 0.0 );
	rbgs_forward( level, z_sum, summed_r );
	DenseVector z_2( level.n(), 0.0 );
	rbgs_forward( level, z_2, r2 );
	for( std::size_t i = 0; i < level.n(); ++i ) {
		CHECK( z_sum[ i ] == Approx( z_base[ i ] + z_2[ i ] ).epsilon( 1e-11 ).margin( 1e-300 ) );
	}
}

TEST_CASE( "the symmetric smoother acts as a symmetric operator", "[smoother]" ) {
	ProblemLevel level( build_matrix( { 4, 4, 4 } ) );
	const std::size_t n = level.n();
	const auto apply = [ &level ]( DenseVector & out, const DenseVector & in ) {
		set_all( out, 0.0 );
		rbgs_symmetric( level, out, in );
	};

	// crude operator-norm estimate via a few power iterations
	Lcg64 rng( 23 );
	DenseVector v = random_vector( n, rng );
	double norm_estimate = 0.0;
	DenseVector w( n );
	for( int it = 0; it < 10; ++it ) {
		apply( w, v );
		norm_estimate = std::sqrt( dot( w, w ) / dot( v, v ) );
		waxpby( v, 1.0 / std::sqrt( dot( w, w ) ), w, 0.0, w );
	}

	for( int trial = 0; trial < 5; ++trial ) {
		const DenseVector x = random_vector( n, rng );
		const DenseVector y = random_vector( n, rng );
		const double diff = slab::detail::bilinear_asymmetry( apply, x, y );
		const double bound = 1e-10 * std::sqrt( dot( x, x ) ) * std::sqrt( dot( y, y ) ) * norm_estimate;
		CHECK( diff <= bound );
	}
}

TEST_CASE( "a forward pass touches every stored nonzero exactly once", "[smoother]" ) {
	ProblemLevel level( build_matrix( { 4, 4, 4 } ) );
	const DenseVector r = build_rhs( { 4, 4, 4 } );
	DenseVector z( level.n(), 0.0 );

	rbgs_forward( level, z, r );
	CHECK( level.stats.nnz_visited == level.A.nnz() );
	rbgs_backward( level, z, r );
	CHECK( level.stats.nnz_visited == 2 * level.A.nnz() );

	std::size_t mask_total = 0;
	for( const IndexMask & mask : level.colors.masks ) {
		mask_total += mask.size();
	}
	CHECK( mask_total == level.n() );
}

TEST_CASE( "smoother rejects wrong vector lengths", "[smoother]" ) {
	ProblemLevel level( identity( 4 ) );
	DenseVector z( 3 ), r( 4 );
	CHECK_THROWS_AS( rbgs_forward( level, z, r ), DimensionMismatch );
	DenseVector z4( 4 ), r3( 3 );
	CHECK_THROWS_AS( rbgs_backward( level, z4, r3 ), DimensionMismatch );
}
