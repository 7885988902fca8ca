#pragma once

#include "wex/linalg.hpp"
#include "wex/tolerances.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

namespace wex {

// Positive semidefinite, unit-trace Hermitian matrix. Eigenvalues in
// [-tol.psd, 0) are clamped to zero and the spectrum renormalised, so the
// cached spectrum always sums to one and 0·log 0 terms are well defined.
class DensityMatrix {
public:
	static DensityMatrix from(const CMatrix& m, const Tolerances& tol = {});
	static DensityMatrix from(const HermitianMatrix& m, const Tolerances& tol = {});
	static DensityMatrix maximally_mixed(std::size_t dim);
	// diag(p) in the computational basis; p need not be sorted.
	static DensityMatrix diagonal(std::span<const double> p, const Tolerances& tol = {});
	// |v><v| / <v|v>.
	static DensityMatrix pure(const CVector& v);

	std::size_t dim() const noexcept { return matrix_.dim(); }
	const CMatrix& matrix() const noexcept { return matrix_.matrix(); }
	const HermitianMatrix& hermitian() const noexcept { return matrix_; }
	// Clamped, renormalised, non-increasing eigenvalues.
	const Spectrum& spectrum() const noexcept { return eig_.values; }
	// Eigenvectors aligned with spectrum().
	const CMatrix& eigenvectors() const noexcept { return eig_.vectors; }

private:
	DensityMatrix(HermitianMatrix m, EigenDecomposition eig) : matrix_(std::move(m)), eig_(std::move(eig)) {}

	HermitianMatrix matrix_;
	EigenDecomposition eig_;
};

struct EnergyBounds {
	double lower = 0.0; // ε
	double upper = 1.0; // δ
};

class Hamiltonian {
public:
	// kbt > 0 and finite. When bounds are given, 0 ≤ ε < δ and every
	// eigenvalue must lie in [ε - tol.psd, δ + tol.psd].
	static Hamiltonian from(HermitianMatrix m, double kbt = 1.0, std::optional<EnergyBounds> bounds = {},
	                        const Tolerances& tol = {});
	static Hamiltonian diagonal(std::span<const double> energies, double kbt = 1.0,
	                            std::optional<EnergyBounds> bounds = {});

	std::size_t dim() const noexcept { return matrix_.dim(); }
	const CMatrix& matrix() const noexcept { return matrix_.matrix(); }
	const HermitianMatrix& hermitian() const noexcept { return matrix_; }
	double kbt() const noexcept { return kbt_; }
	const std::optional<EnergyBounds>& bounds() const noexcept { return bounds_; }
	// Eigen-energies, non-increasing.
	const Spectrum& energies() const noexcept { return eig_.values; }
	const CMatrix& eigenvectors() const noexcept { return eig_.vectors; }

private:
	Hamiltonian(HermitianMatrix m, EigenDecomposition eig, double kbt, std::optional<EnergyBounds> bounds)
	    : matrix_(std::move(m)), eig_(std::move(eig)), kbt_(kbt), bounds_(bounds) {}

	HermitianMatrix matrix_;
	EigenDecomposition eig_;
	double kbt_;
	std::optional<EnergyBounds> bounds_;
};

// |ψ> = Σ_ij A_ij |i>|j> with equal local dimensions.
class PureBipartiteState {
public:
	// Rejects non-square amplitudes and norms off by more than
	// tol.construction, then rescales to unit Frobenius norm.
	static PureBipartiteState from(const CMatrix& amplitudes, const Tolerances& tol = {});

	std::size_t local_dim() const noexcept { return static_cast<std::size_t>(amplitudes_.rows()); }
	const CMatrix& amplitudes() const noexcept { return amplitudes_; }

private:
	explicit PureBipartiteState(CMatrix a) : amplitudes_(std::move(a)) {}
	CMatrix amplitudes_;
};

// Σ_i ρ_i↓ |b_i><b_i| where b_i is column i of `basis`.
DensityMatrix reorder_descending(const DensityMatrix& rho, const CMatrix& basis, const Tolerances& tol = {});
DensityMatrix reorder_descending(const DensityMatrix& rho);

// tr_B |ψ><ψ| = A A^†; its eigenvalues are the squared Schmidt coefficients.
DensityMatrix reduced_state(const PureBipartiteState& psi);

// H_k = ω Σ_{i=0}^{k} |i><i|, declared bounds (0, ω).
Hamiltonian two_level_hamiltonian(std::size_t dim, std::size_t k, double omega, double kbt = 1.0);

} // namespace wex
