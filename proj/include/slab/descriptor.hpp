
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

	/**
	 * Per-call modifiers for the primitive operations. Flags are independent
	 * and both default to off.
	 */
	struct Descriptor {
		/// interpret masks by pattern only; IndexMask carries no values, so this is always honored
		bool structural = false;
		/// operate on the transposed matrix without materializing it
		bool transpose_matrix = false;
	};

	namespace descriptors {
		inline constexpr Descriptor none{};
		inline constexpr Descriptor structural{ true, false };
		inline constexpr Descriptor transpose_matrix{ false, true };
		inline constexpr Descriptor structural_transpose{ true, true };
	} // namespace descriptors

} // namespace slab
