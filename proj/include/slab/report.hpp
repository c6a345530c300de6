
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
 * @file report.hpp
 * Benchmark configuration and report structures with their JSON and CSV
 * forms. JSON is the full-fidelity schema; CSV is a flat projection with one
 * row per (run, level, kernel) plus per-run summary rows with an empty level
 * column. Doubles are printed in shortest round-trip form, so emit-parse-emit
 * is the identity on both formats.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cost_model.hpp"
#include "error.hpp"
#include "problem.hpp"
#include "text.hpp"

namespace slab {

	struct BenchConfig {
		GridDims dims{ 16, 16, 16 };
		std::size_t levels = 4;
		std::size_t sweeps = 1;
		std::size_t max_iters = 500;
		double rtol = 1e-6;
		std::optional< std::size_t > fixed_iterations;
		std::size_t runs = 10;
		std::uint64_t seed = 1;
		bool use_preconditioner = true;
		/// 0 keeps the library's thread default
		unsigned threads = 0;
		bool skip_symmetry = false;

		bool operator==( const BenchConfig & ) const = default;
	};

	struct SymmetryReport {
		bool skipped = false;
		bool matrix_pass = false;
		double matrix_diff = 0.0;
		bool precond_pass = false;
		double precond_diff = 0.0;
		double tolerance = 0.0;

		bool all_pass() const noexcept {
			return skipped || ( matrix_pass && precond_pass );
		}
		bool operator==( const SymmetryReport & ) const = default;
	};

	struct LevelTimings {
		std::size_t level = 0;
		std::size_t n = 0;
		double smoother_seconds = 0.0;
		double transfer_seconds = 0.0;
		double mg_seconds = 0.0;
		std::uint64_t nnz_visited = 0;

		bool operator==( const LevelTimings & ) const = default;
	};

	struct RunRecord {
		std::size_t run = 0;
		double solve_seconds = 0.0;
		std::size_t iterations = 0;
		double final_residual = 0.0;
		bool converged = false;
		std::vector< double > residual_history;
		std::vector< LevelTimings > levels;

		bool operator==( const RunRecord & ) const = default;
	};

	struct LevelShares {
		std::size_t level = 0;
		double smoother_share = 0.0;
		double transfer_share = 0.0;

		bool operator==( const LevelShares & ) const = default;
	};

	struct Aggregate {
		double mean_solve_seconds = 0.0;
		/// share of total solve time spent inside the whole V-cycle
		double mg_share = 0.0;
		std::vector< LevelShares > levels;

		bool operator==( const Aggregate & ) const = default;
	};

	struct Report {
		BenchConfig config;
		double generation_seconds = 0.0;
		SymmetryReport symmetry;
		std::vector< RunRecord > runs;
		Aggregate aggregate;

		bool operator==( const Report & ) const = default;
	};

	// ---- JSON schema -------------------------------------------------------

	inline void to_json( nlohmann::json & j, const BenchConfig & c ) {
		j = nlohmann::json{
			{ "nx", c.dims.nx }, { "ny", c.dims.ny }, { "nz", c.dims.nz },
			{ "levels", c.levels }, { "sweeps", c.sweeps },
			{ "max_iters", c.max_iters }, { "rtol", c.rtol },
			{ "runs", c.runs }, { "seed", c.seed },
			{ "preconditioner", c.use_preconditioner },
			{ "threads", c.threads }, { "skip_symmetry", c.skip_symmetry },
		};
		j[ "fixed_iterations" ] = c.fixed_iterations ? nlohmann::json( *c.fixed_iterations ) : nlohmann::json();
	}

	inline void from_json( const nlohmann::json & j, BenchConfig & c ) {
		j.at( "nx" ).get_to( c.dims.nx );
		j.at( "ny" ).get_to( c.dims.ny );
		j.at( "nz" ).get_to( c.dims.nz );
		j.at( "levels" ).get_to( c.levels );
		j.at( "sweeps" ).get_to( c.sweeps );
		j.at( "max_iters" ).get_to( c.max_iters );
		j.at( "rtol" ).get_to( c.rtol );
		j.at( "runs" ).get_to( c.runs );
		j.at( "seed" ).get_to( c.seed );
		j.at( "preconditioner" ).get_to( c.use_preconditioner );
		j.at( "threads" ).get_to( c.threads );
		j.at( "skip_symmetry" ).get_to( c.skip_symmetry );
		const nlohmann::json & fixed = j.at( "fixed_iterations" );
		c.fixed_iterations = fixed.is_null() ? std::nullopt : std::optional< std::size_t >( fixed.get< std::size_t >() );
	}

	inline void to_json( nlohmann::json & j, const SymmetryReport & s ) {
		j = nlohmann::json{
			{ "skipped", s.skipped },
			{ "matrix_pass", s.matrix_pass }, { "matrix_diff", s.matrix_diff },
			{ "precond_pass", s.precond_pass }, { "precond_diff", s.precond_diff },
			{ "tolerance", s.tolerance },
		};
	}

	inline void from_json( const nlohmann::json & j, SymmetryReport & s ) {
		j.at( "skipped" ).get_to( s.skipped );
		j.at( "matrix_pass" ).get_to( s.matrix_pass );
		j.at( "matrix_diff" ).get_to( s.matrix_diff );
		j.at( "precond_pass" ).get_to( s.precond_pass );
		j.at( "precond_diff" ).get_to( s.precond_diff );
		j.at( "tolerance" ).get_to( s.tolerance );
	}

	inline void to_json( nlohmann::json & j, const LevelTimings & t ) {
		j = nlohmann::json{
			{ "level", t.level }, { "n", t.n },
			{ "smoother_seconds", t.smoother_seconds },
			{ "transfer_seconds", t.transfer_seconds },
			{ "mg_seconds", t.mg_seconds },
			{ "nnz_visited", t.nnz_visited },
		};
	}

	inline void from_json( const nlohmann::json & j, LevelTimings & t ) {
		j.at( "level" ).get_to( t.level );
		j.at( "n" ).get_to( t.n );
		j.at( "smoother_seconds" ).get_to( t.smoother_seconds );
		j.at( "transfer_seconds" ).get_to( t.transfer_seconds );
		j.at( "mg_seconds" ).get_to( t.mg_seconds );
		j.at( "nnz_visited" ).get_to( t.nnz_visited );
	}

	inline void to_json( nlohmann::json & j, const RunRecord & r ) {
		j = nlohmann::json{
			{ "run", r.run },
			{ "solve_seconds", r.solve_seconds },
			{ "iterations", r.iterations },
			{ "final_residual", r.final_residual },
			{ "converged", r.converged },
			{ "residual_history", r.residual_history },
			{ "levels", r.levels },
		};
	}

	inline void from_json( const nlohmann::json & j, RunRecord & r ) {
		j.at( "run" ).get_to( r.run );
		j.at( "solve_seconds" ).get_to( r.solve_seconds );
		j.at( "iterations" ).get_to( r.iterations );
		j.at( "final_residual" ).get_to( r.final_residual );
		j.at( "converged" ).get_to( r.converged );
		j.at( "residual_history" ).get_to( r.residual_history );
		j.at( "levels" ).get_to( r.levels );
	}

	inline void to_json( nlohmann::json & j, const LevelShares & s ) {
		j = nlohmann::json{
			{ "level", s.level },
			{ "smoother_share", s.smoother_share },
			{ "transfer_share", s.transfer_share },
		};
	}

	inline void from_json( const nlohmann::json & j, LevelShares & s ) {
		j.at( "level" ).get_to( s.level );
		j.at( "smoother_share" ).get_to( s.smoother_share );
		j.at( "transfer_share" ).get_to( s.transfer_share );
	}

	inline void to_json( nlohmann::json & j, const Aggregate & a ) {
		j = nlohmann::json{
			{ "mean_solve_seconds", a.mean_solve_seconds },
			{ "mg_share", a.mg_share },
			{ "levels", a.levels },
		};
	}

	inline void from_json( const nlohmann::json & j, Aggregate & a ) {
		j.at( "mean_solve_seconds" ).get_to( a.mean_solve_seconds );
		j.at( "mg_share" ).get_to( a.mg_share );
		j.at( "levels" ).get_to( a.levels );
	}

	inline void to_json( nlohmann::json & j, const Report & r ) {
		j = nlohmann::json{
			{ "config", r.config },
			{ "generation_seconds", r.generation_seconds },
			{ "symmetry", r.symmetry },
			{ "runs", r.runs },
			{ "aggregate", r.aggregate },
		};
	}

	inline void from_json( const nlohmann::json & j, Report & r ) {
		j.at( "config" ).get_to( r.config );
		j.at( "generation_seconds" ).get_to( r.generation_seconds );
		j.at( "symmetry" ).get_to( r.symmetry );
		j.at( "runs" ).get_to( r.runs );
		j.at( "aggregate" ).get_to( r.aggregate );
	}

	inline std::string report_to_json( const Report & report ) {
		return nlohmann::json( report ).dump( 2 );
	}

	inline Report report_from_json( const std::string & text ) {
		return nlohmann::json::parse( text ).get< Report >();
	}

	// ---- CSV projection ----------------------------------------------------

	/** One CSV data row; level is empty for per-run summary rows. */
	struct CsvRow {
		std::size_t run = 0;
		std::optional< std::size_t > level;
		std::string kernel;
		double value = 0.0;

		bool operator==( const CsvRow & ) const = default;
	};

	inline std::vector< CsvRow > report_to_rows( const Report & report ) {
		std::vector< CsvRow > rows;
		for( const RunRecord & run : report.runs ) {
			for( const LevelTimings & lt : run.levels ) {
				rows.push_back( { run.run, lt.level, "smoother_seconds", lt.smoother_seconds } );
				rows.push_back( { run.run, lt.level, "transfer_seconds", lt.transfer_seconds } );
				rows.push_back( { run.run, lt.level, "mg_seconds", lt.mg_seconds } );
				rows.push_back( { run.run, lt.level, "nnz_visited", static_cast< double >( lt.nnz_visited ) } );
			}
			rows.push_back( { run.run, std::nullopt, "solve_seconds", run.solve_seconds } );
			rows.push_back( { run.run, std::nullopt, "iterations", static_cast< double >( run.iterations ) } );
			rows.push_back( { run.run, std::nullopt, "final_residual", run.final_residual } );
			rows.push_back( { run.run, std::nullopt, "converged", run.converged ? 1.0 : 0.0 } );
		}
		return rows;
	}

	inline std::string rows_to_csv( const std::vector< CsvRow > & rows ) {
		std::string out = "run,level,kernel,value\n";
		for( const CsvRow & row : rows ) {
			out += std::to_string( row.run );
			out += ',';
			if( row.level ) {
				out += std::to_string( *row.level );
			}
			out += ',';
			out += row.kernel;
			out += ',';
			out += detail::double_to_string( row.value );
			out += '\n';
		}
		return out;
	}

	namespace detail {
		inline std::vector< std::string_view > split_fields( std::string_view line, char sep ) {
			std::vector< std::string_view > fields;
			std::size_t begin = 0;
			while( true ) {
				const std::size_t end = line.find( sep, begin );
				fields.push_back( line.substr( begin, end - begin ) );
				if( end == std::string_view::npos ) {
					break;
				}
				begin = end + 1;
			}
			return fields;
		}
	}

	inline std::vector< CsvRow > csv_to_rows( const std::string & text ) {
		std::vector< CsvRow > rows;
		std::istringstream in( text );
		std::string line;
		if( !std::getline( in, line ) || line != "run,level,kernel,value" ) {
			throw InvalidArgument( "csv_to_rows: missing or unexpected header" );
		}
		while( std::getline( in, line ) ) {
			if( line.empty() ) {
				continue;
			}
			const auto fields = detail::split_fields( line, ',' );
			if( fields.size() != 4 ) {
				throw InvalidArgument( "csv_to_rows: expected 4 fields, got line '" + line + "'" );
			}
			CsvRow row;
			row.run = detail::parse_size( fields[ 0 ] );
			row.level = fields[ 1 ].empty() ? std::nullopt : std::optional< std::size_t >( detail::parse_size( fields[ 1 ] ) );
			row.kernel = std::string( fields[ 2 ] );
			row.value = detail::parse_double( fields[ 3 ] );
			rows.push_back( std::move( row ) );
		}
		return rows;
	}

	inline std::string report_to_csv( const Report & report ) {
		return rows_to_csv( report_to_rows( report ) );
	}

	// ---- cost-model table --------------------------------------------------

	inline constexpr const char * cost_csv_header =
		"p,px,py,pz,halo_formula,geometric_comm,blockcyclic_comm,blockcyclic2d_comm,computation,synchronization";

	inline std::string cost_table_to_csv( const std::vector< DistributionComparison > & rows ) {
		std::string out = std::string( cost_csv_header ) + "\n";
		for( const DistributionComparison & row : rows ) {
			out += std::to_string( row.p ) + ',';
			out += std::to_string( row.grid.px ) + ',' + std::to_string( row.grid.py ) + ','
				+ std::to_string( row.grid.pz ) + ',';
			out += std::to_string( row.halo_formula ) + ',';
			out += detail::double_to_string( row.geometric.communication ) + ',';
			out += detail::double_to_string( row.blockcyclic.communication ) + ',';
			out += detail::double_to_string( row.blockcyclic2d_comm ) + ',';
			out += detail::double_to_string( row.geometric.computation ) + ',';
			out += std::to_string( row.geometric.synchronization );
			out += '\n';
		}
		return out;
	}

	inline std::vector< DistributionComparison > cost_table_from_csv( const std::string & text ) {
		std::vector< DistributionComparison > rows;
		std::istringstream in( text );
		std::string line;
		if( !std::getline( in, line ) || line != cost_csv_header ) {
			throw InvalidArgument( "cost_table_from_csv: missing or unexpected header" );
		}
		while( std::getline( in, line ) ) {
			if( line.empty() ) {
				continue;
			}
			const auto fields = detail::split_fields( line, ',' );
			if( fields.size() != 10 ) {
				throw InvalidArgument( "cost_table_from_csv: expected 10 fields, got line '" + line + "'" );
			}
			DistributionComparison row;
			row.p = detail::parse_size( fields[ 0 ] );
			row.grid = { detail::parse_size( fields[ 1 ] ), detail::parse_size( fields[ 2 ] ),
				detail::parse_size( fields[ 3 ] ) };
			row.halo_formula = detail::parse_size( fields[ 4 ] );
			row.geometric.communication = detail::parse_double( fields[ 5 ] );
			row.blockcyclic.communication = detail::parse_double( fields[ 6 ] );
			row.blockcyclic2d_comm = detail::parse_double( fields[ 7 ] );
			row.geometric.computation = detail::parse_double( fields[ 8 ] );
			row.blockcyclic.computation = row.geometric.computation;
			row.geometric.synchronization = detail::parse_size( fields[ 9 ] );
			row.blockcyclic.synchronization = row.geometric.synchronization;
			rows.push_back( row );
		}
		return rows;
	}

	inline void to_json( nlohmann::json & j, const DistributionComparison & row ) {
		j = nlohmann::json{
			{ "p", row.p },
			{ "px", row.grid.px }, { "py", row.grid.py }, { "pz", row.grid.pz },
			{ "halo_formula", row.halo_formula },
			{ "geometric_comm", row.geometric.communication },
			{ "blockcyclic_comm", row.blockcyclic.communication },
			{ "blockcyclic2d_comm", row.blockcyclic2d_comm },
			{ "computation", row.geometric.computation },
			{ "synchronization", row.geometric.synchronization },
		};
	}

} // namespace slab
