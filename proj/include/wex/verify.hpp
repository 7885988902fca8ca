#pragma once

#include "wex/tolerances.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wex {

struct PropertyOutcome {
	std::string suite;
	std::string property;
	std::size_t checked = 0;
	std::size_t failed = 0;
};

struct VerifyOptions {
	std::uint64_t seed = 42;
	std::size_t n = 200;
	unsigned threads = 1;
	Tolerances tol;
	// Self-test of the harness: the partial-sum route of the conversion suite
	// demands gaps above +1e-2, which must surface as failures.
	bool corrupt_tolerance = false;
};

// Suites: thermo, majorisation, conversion, witness, all. Instance i of every
// property draws from stream (seed, i), so outcomes depend only on (seed, n).
// Throws ArgumentError for an unknown suite.
std::vector<PropertyOutcome> run_verification(const std::string& suite, const VerifyOptions& options);

const std::vector<std::string>& verification_suites();

} // namespace wex
