
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

#include <ostream>

#include "sparse_matrix.hpp"
#include "text.hpp"

namespace slab {

	/**
	 * Debug dump of a CSR matrix as MatrixMarket coordinate text (1-based
	 * indices, general symmetry), for eyeballing and external verification.
	 */
	inline void write_matrix_market( std::ostream & out, const SparseMatrix & A ) {
		out << "%%MatrixMarket matrix coordinate real general\n";
		out << A.nrows() << " " << A.ncols() << " " << A.nnz() << "\n";
		for( std::size_t i = 0; i < A.nrows(); ++i ) {
			const auto cols = A.row_cols( i );
			const auto vals = A.row_values( i );
			for( std::size_t k = 0; k < cols.size(); ++k ) {
				out << ( i + 1 ) << " " << ( cols[ k ] + 1 ) << " " << detail::double_to_string( vals[ k ] ) << "\n";
			}
		}
	}

} // namespace slab
