
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

#include <charconv>
#include <string>
#include <string_view>

#include "error.hpp"

namespace slab {
	namespace detail {

		/** Shortest decimal form that parses back to the identical double. */
		inline std::string double_to_string( double v ) {
			char buf[ 32 ];
			const auto res = std::to_chars( buf, buf + sizeof( buf ), v );
			return std::string( buf, res.ptr );
		}

		inline double parse_double( std::string_view text ) {
			double v = 0.0;
			const auto res = std::from_chars( text.data(), text.data() + text.size(), v );
			if( res.ec != std::errc{} || res.ptr != text.data() + text.size() ) {
				throw InvalidArgument( "parse_double: cannot parse '" + std::string( text ) + "'" );
			}
			return v;
		}

		inline std::size_t parse_size( std::string_view text ) {
			std::size_t v = 0;
			const auto res = std::from_chars( text.data(), text.data() + text.size(), v );
			if( res.ec != std::errc{} || res.ptr != text.data() + text.size() ) {
				throw InvalidArgument( "parse_size: cannot parse '" + std::string( text ) + "'" );
			}
			return v;
		}

	} // namespace detail
} // namespace slab
