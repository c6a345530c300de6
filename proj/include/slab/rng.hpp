
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

#include <cstdint>

#include "dense_vector.hpp"

namespace slab {

	/**
	 * 64-bit linear congruential generator,
	 *
	 *     state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64),
	 *
	 * i.e. Knuth's MMIX constants. The generator is part of the external
	 * contract: the symmetry test draws its vectors from it, so verdicts are
	 * reproducible from the seed alone. Doubles take the top 53 bits.
	 */
	class Lcg64 {
	public:
		explicit Lcg64( std::uint64_t seed ) : state_( seed ) {}

		std::uint64_t next_u64() {
			state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
			return state_;
		}

		/** Uniform in [0, 1). */
		double next_unit() {
			return static_cast< double >( next_u64() >> 11 ) * 0x1.0p-53;
		}

		/** Uniform in [-1, 1). */
		double next_symmetric() {
			return 2.0 * next_unit() - 1.0;
		}

	private:
		std::uint64_t state_;
	};

	/** Vector with entries drawn from rng.next_symmetric(), front to back. */
	inline DenseVector random_vector( std::size_t n, Lcg64 & rng ) {
		DenseVector v( n );
		for( std::size_t i = 0; i < n; ++i ) {
			v[ i ] = rng.next_symmetric();
		}
		return v;
	}

} // namespace slab
