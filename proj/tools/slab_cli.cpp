
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
 * @file slab_cli.cpp
 * Command-line harness. Subcommands:
 *
 *   bench  generate the problem, run the symmetry test, execute repeated
 *          timed CG+MG solves and emit a JSON or CSV report;
 *   cost   print the analytic BSP communication-cost comparison for a list
 *          of node counts.
 *
 * Exit codes: 0 success, 1 configuration error, 2 symmetry-test failure,
 * 3 solver breakdown.
 */

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <slab/slab.hpp>

namespace {

	constexpr int exit_ok = 0;
	constexpr int exit_config_error = 1;
	constexpr int exit_symmetry_failure = 2;
	constexpr int exit_solver_breakdown = 3;

	void write_output( const std::string & path, const std::string & payload ) {
		if( path.empty() || path == "-" ) {
			std::cout << payload;
			if( !payload.empty() && payload.back() != '\n' ) {
				std::cout << '\n';
			}
			return;
		}
		std::ofstream out( path );
		if( !out ) {
			throw slab::InvalidArgument( "cannot open output file '" + path + "'" );
		}
		out << payload;
	}

	std::string cost_table_to_text( const std::vector< slab::DistributionComparison > & rows ) {
		std::ostringstream out;
		out << std::left << std::setw( 6 ) << "p" << std::setw( 14 ) << "px x py x pz" << std::right
			<< std::setw( 12 ) << "halo" << std::setw( 16 ) << "geometric" << std::setw( 16 ) << "blockcyclic"
			<< std::setw( 16 ) << "blockcyclic2d" << std::setw( 16 ) << "compute" << std::setw( 6 ) << "sync"
			<< "\n";
		for( const slab::DistributionComparison & row : rows ) {
			std::ostringstream grid;
			grid << row.grid.px << "x" << row.grid.py << "x" << row.grid.pz;
			out << std::left << std::setw( 6 ) << row.p << std::setw( 14 ) << grid.str() << std::right
				<< std::setw( 12 ) << row.halo_formula << std::setw( 16 ) << row.geometric.communication
				<< std::setw( 16 ) << row.blockcyclic.communication << std::setw( 16 ) << std::setprecision( 8 )
				<< row.blockcyclic2d_comm << std::setw( 16 ) << row.geometric.computation << std::setw( 6 )
				<< row.geometric.synchronization << "\n";
		}
		return out.str();
	}

	int run_bench( const slab::BenchConfig & cfg, const std::string & format, const std::string & output ) {
		std::cerr << "grid " << cfg.dims.nx << "x" << cfg.dims.ny << "x" << cfg.dims.nz << ", " << cfg.levels
			<< " levels, " << cfg.runs << " runs"
			<< ( cfg.fixed_iterations ? ", fixed " + std::to_string( *cfg.fixed_iterations ) + " iterations"
					: ", rtol " + std::to_string( cfg.rtol ) )
			<< ( cfg.use_preconditioner ? "" : ", preconditioner off" ) << "\n";

		const slab::Report report = slab::run_benchmark( cfg );
		write_output( output, format == "csv" ? slab::report_to_csv( report ) : slab::report_to_json( report ) );

		std::cerr << "generation: " << report.generation_seconds << " s\n";
		if( !report.symmetry.all_pass() ) {
			std::cerr << "symmetry test FAILED (matrix diff " << report.symmetry.matrix_diff
				<< ", preconditioner diff " << report.symmetry.precond_diff << ", tolerance "
				<< report.symmetry.tolerance << ")\n";
			return exit_symmetry_failure;
		}
		if( !report.runs.empty() ) {
			std::cerr << "mean solve: " << report.aggregate.mean_solve_seconds << " s over " << report.runs.size()
				<< " runs, " << report.runs.front().iterations << " iterations, MG share "
				<< report.aggregate.mg_share << "\n";
		}
		return exit_ok;
	}

	int run_cost( const slab::GridDims & dims, const std::vector< std::size_t > & node_counts,
		const std::string & format, const std::string & output ) {
		std::vector< slab::DistributionComparison > rows;
		rows.reserve( node_counts.size() );
		for( const std::size_t p : node_counts ) {
			rows.push_back( slab::compare_distributions( dims, p ) );
		}
		if( format == "csv" ) {
			write_output( output, slab::cost_table_to_csv( rows ) );
		} else if( format == "json" ) {
			write_output( output, nlohmann::json( rows ).dump( 2 ) );
		} else {
			write_output( output, cost_table_to_text( rows ) );
		}
		return exit_ok;
	}

} // namespace

int main( int argc, char ** argv ) {
	CLI::App app{ "masked sparse linear-algebra core with a multigrid CG benchmark harness" };
	app.require_subcommand( 1 );

	slab::BenchConfig cfg;
	std::string bench_format = "json";
	std::string bench_output = "-";
	std::size_t fixed_iters = 0;
	bool no_precond = false;

	CLI::App * bench = app.add_subcommand( "bench", "run the timed CG+MG benchmark and emit a report" );
	bench->add_option( "--nx", cfg.dims.nx, "grid points along x" )->required();
	bench->add_option( "--ny", cfg.dims.ny, "grid points along y" )->required();
	bench->add_option( "--nz", cfg.dims.nz, "grid points along z" )->required();
	bench->add_option( "--levels", cfg.levels, "multigrid levels" )->capture_default_str();
	bench->add_option( "--sweeps", cfg.sweeps, "symmetric smoother sweeps per smoothing step" )->capture_default_str();
	bench->add_option( "--max-iters", cfg.max_iters, "CG iteration cap" )->capture_default_str();
	bench->add_option( "--rtol", cfg.rtol, "relative residual target" )->capture_default_str();
	bench->add_option( "--fixed-iters", fixed_iters, "run exactly this many CG iterations (recommended for timing)" );
	bench->add_option( "--runs", cfg.runs, "timed repetitions" )->capture_default_str();
	bench->add_option( "--seed", cfg.seed, "seed for the symmetry-test vectors" )->capture_default_str();
	bench->add_flag( "--no-precond", no_precond, "solve without the multigrid preconditioner" );
	bench->add_option( "--threads", cfg.threads, "cap kernel threads (0 = default)" )->capture_default_str();
	bench->add_flag( "--skip-symmetry", cfg.skip_symmetry, "skip the symmetry test" );
	bench->add_option( "--format", bench_format, "report format" )
		->check( CLI::IsMember( { "json", "csv" } ) )
		->capture_default_str();
	bench->add_option( "--output", bench_output, "report path ('-' for stdout)" )->capture_default_str();

	slab::GridDims cost_dims;
	std::vector< std::size_t > node_counts;
	std::string cost_format = "table";
	std::string cost_output = "-";

	CLI::App * cost = app.add_subcommand( "cost", "analytic BSP cost comparison of data distributions" );
	cost->add_option( "--nx", cost_dims.nx, "grid points along x" )->required();
	cost->add_option( "--ny", cost_dims.ny, "grid points along y" )->required();
	cost->add_option( "--nz", cost_dims.nz, "grid points along z" )->required();
	cost->add_option( "--nodes", node_counts, "comma-separated node counts" )->required()->delimiter( ',' );
	cost->add_option( "--format", cost_format, "output format" )
		->check( CLI::IsMember( { "table", "csv", "json" } ) )
		->capture_default_str();
	cost->add_option( "--output", cost_output, "output path ('-' for stdout)" )->capture_default_str();

	try {
		app.parse( argc, argv );
	} catch( const CLI::ParseError & e ) {
		const int code = app.exit( e );
		return code == 0 ? exit_ok : exit_config_error;
	}

	try {
		if( bench->parsed() ) {
			if( fixed_iters > 0 ) {
				cfg.fixed_iterations = fixed_iters;
			}
			cfg.use_preconditioner = !no_precond;
			return run_bench( cfg, bench_format, bench_output );
		}
		return run_cost( cost_dims, node_counts, cost_format, cost_output );
	} catch( const slab::SolverBreakdown & e ) {
		std::cerr << "solver breakdown: " << e.what() << "\n";
		return exit_solver_breakdown;
	} catch( const slab::Error & e ) {
		std::cerr << "error: " << e.what() << "\n";
		return exit_config_error;
	}
}
