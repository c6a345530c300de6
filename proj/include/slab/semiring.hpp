
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

namespace slab {

	/** Commutative, associative addition over 64-bit reals with identity 0. */
	struct Plus {
		static constexpr double identity = 0.0;
		double operator()( double a, double b ) const noexcept {
			return a + b;
		}
	};

	/** Multiplication over 64-bit reals with identity 1. */
	struct Times {
		static constexpr double identity = 1.0;
		double operator()( double a, double b ) const noexcept {
			return a * b;
		}
	};

	/**
	 * Additive monoid plus multiplicative operator parameterizing the numerical
	 * kernels. The benchmark only ever instantiates plus-times over the reals,
	 * but keeping the structure an explicit compile-time parameter keeps the
	 * kernels generic and lets the compiler specialize them.
	 */
	template< class AddOp, class MulOp >
	struct Semiring {
		AddOp add{};
		MulOp mul{};

		static constexpr double zero() noexcept {
			return AddOp::identity;
		}
		static constexpr double one() noexcept {
			return MulOp::identity;
		}
	};

	using PlusTimes = Semiring< Plus, Times >;

} // namespace slab
