
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

#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"

namespace slab {

	/**
	 * Structural index set: a strictly increasing sequence of positions inside
	 * a fixed universe. Masked operations touch exactly these positions and
	 * leave the rest of their output untouched.
	 */
	class IndexMask {
	public:
		IndexMask() = default;

		IndexMask( std::size_t universe_size, std::vector< std::size_t > members )
			: universe_( universe_size ), members_( std::move( members ) ) {
			for( std::size_t k = 0; k < members_.size(); ++k ) {
				if( members_[ k ] >= universe_ ) {
					throw InvalidArgument( "IndexMask: member out of range" );
				}
				if( k > 0 && members_[ k ] <= members_[ k - 1 ] ) {
					throw InvalidArgument( "IndexMask: members must be strictly increasing" );
				}
			}
		}

		/** Mask selecting every position of an n-element universe. */
		static IndexMask full( std::size_t n ) {
			std::vector< std::size_t > all( n );
			std::iota( all.begin(), all.end(), std::size_t( 0 ) );
			return IndexMask( n, std::move( all ) );
		}

		std::size_t universe_size() const noexcept {
			return universe_;
		}
		std::span< const std::size_t > members() const noexcept {
			return members_;
		}
		std::size_t size() const noexcept {
			return members_.size();
		}
		bool empty() const noexcept {
			return members_.empty();
		}

	private:
		std::size_t universe_ = 0;
		std::vector< std::size_t > members_;
	};

} // namespace slab
