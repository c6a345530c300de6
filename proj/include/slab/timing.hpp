
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

#include <chrono>
#include <cstdint>

namespace slab {
	namespace detail {

		/** Monotonic wall clock in nanoseconds, shared by all instrumentation. */
		inline std::uint64_t monotonic_ns() {
			const auto now = std::chrono::steady_clock::now().time_since_epoch();
			return static_cast< std::uint64_t >( std::chrono::duration_cast< std::chrono::nanoseconds >( now ).count() );
		}

	} // namespace detail
} // namespace slab
