#pragma once

#include "wex/channel.hpp"
#include "wex/linalg.hpp"
#include "wex/states.hpp"

#include <cstddef>
#include <cstdint>
#include <random>

namespace wex {

using Rng = std::mt19937_64;

// Independent stream per (seed, stream) pair; sampling loops use the sample
// index as the stream so results do not depend on how work is partitioned.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

// Entries with independent real and imaginary parts ~ N(0, 1/2).
CMatrix complex_gaussian(std::size_t rows, std::size_t cols, Rng& rng);

// QR of a complex Gaussian matrix with R's diagonal made positive real.
CMatrix sample_haar_unitary(std::size_t dim, Rng& rng);
CMatrix sample_haar_unitary(std::size_t dim, std::uint64_t seed);

// G G^† / tr(G G^†), Hilbert–Schmidt measure.
DensityMatrix sample_hs_state(std::size_t dim, Rng& rng);
DensityMatrix sample_hs_state(std::size_t dim, std::uint64_t seed);

// Haar random unitaries with flat-Dirichlet weights.
MixedUnitaryChannel sample_mixed_unitary(std::size_t dim, std::size_t terms, Rng& rng);

// U diag(E) U^† with E_i ~ U[lower, upper] i.i.d. and Haar U.
Hamiltonian sample_bounded_hamiltonian(std::size_t dim, double lower, double upper, double kbt, Rng& rng);

} // namespace wex
