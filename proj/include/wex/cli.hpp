#pragma once

#include "wex/tolerances.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wex::cli {

// Stable across commands.
enum ExitCode : int {
	success = 0,    // computed / convertible / witness found / all properties hold
	negative = 1,   // not convertible / no witness / a property failed
	input_error = 2,
	inconclusive = 3,
	internal_error = 4, // cross-checks between independent routes failed
};

struct Config {
	double kbt = 1.0;
	// --kbt was given; it then overrides the kBT stored in Hamiltonian files.
	bool kbt_explicit = false;
	double epsilon = 0.0;
	double delta_max = 1.0;
	double omega = 1.0;
	Tolerances tol;
	std::uint64_t seed = 42;
	unsigned threads = 1;
};

// Parses `name=value` (name one of the Tolerances fields) or a bare number,
// which sets the verdict tolerance. Throws InputError.
void apply_tolerance_override(Tolerances& tol, const std::string& spec);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wex::cli
