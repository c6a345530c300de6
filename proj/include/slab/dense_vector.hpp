
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
#include <span>
#include <utility>
#include <vector>

namespace slab {

	/**
	 * Fixed-length vector of 64-bit reals with every position stored.
	 *
	 * The length is set at construction and never changes; operations check it
	 * instead of resizing.
	 */
	class DenseVector {
	public:
		DenseVector() = default;

		explicit DenseVector( std::size_t length, double value = 0.0 ) : values_( length, value ) {}

		static DenseVector from( std::vector< double > values ) {
			DenseVector v;
			v.values_ = std::move( values );
			return v;
		}

		std::size_t size() const noexcept {
			return values_.size();
		}

		double & operator[]( std::size_t i ) noexcept {
			return values_[ i ];
		}
		double operator[]( std::size_t i ) const noexcept {
			return values_[ i ];
		}

		std::span< double > values() noexcept {
			return values_;
		}
		std::span< const double > values() const noexcept {
			return values_;
		}

		bool operator==( const DenseVector & ) const = default;

	private:
		std::vector< double > values_;
	};

} // namespace slab
