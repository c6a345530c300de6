
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
 * @file parallel.hpp
 * Internal parallel-execution helpers.
 *
 * All kernels partition work into ranges whose boundaries depend only on the
 * problem size, never on the thread count. Reductions accumulate fixed-size
 * chunks and combine the partial results in chunk order, so a kernel produces
 * bit-identical output for any number of threads.
 */

#pragma once

#include <atomic>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace slab {

	namespace detail {
		inline std::atomic< unsigned > & thread_cap() {
			static std::atomic< unsigned > cap{ 0 };
			return cap;
		}
	}

	/**
	 * Caps the number of threads the kernels may use; 0 restores the OpenMP
	 * default. Results do not depend on this setting.
	 */
	inline void set_max_threads( unsigned threads ) {
		detail::thread_cap().store( threads, std::memory_order_relaxed );
	}

	/** Number of threads the kernels currently use (1 when built without OpenMP). */
	inline unsigned max_threads() {
#ifdef _OPENMP
		const unsigned cap = detail::thread_cap().load( std::memory_order_relaxed );
		return cap == 0 ? static_cast< unsigned >( omp_get_max_threads() ) : cap;
#else
		return 1U;
#endif
	}

	namespace detail {

		// element count below which forking is not worth it
		inline constexpr std::size_t parallel_grain = 2048;

		// fixed chunk length for reductions; boundaries never depend on thread count
		inline constexpr std::size_t reduction_chunk = 4096;

		/** Runs body(i) for i in [0, count); iterations must be independent and must not throw. */
		template< typename Body >
		inline void parallel_for( std::size_t count, Body && body ) {
#ifdef _OPENMP
			if( max_threads() > 1 && count >= parallel_grain ) {
				const std::ptrdiff_t end = static_cast< std::ptrdiff_t >( count );
				#pragma omp parallel for num_threads( static_cast< int >( max_threads() ) ) schedule( static )
				for( std::ptrdiff_t i = 0; i < end; ++i ) {
					body( static_cast< std::size_t >( i ) );
				}
				return;
			}
#endif
			for( std::size_t i = 0; i < count; ++i ) {
				body( i );
			}
		}

	} // namespace detail

} // namespace slab
