#include "wex/states.hpp"

#include "wex/errors.hpp"

#include <cmath>
#include <sstream>

namespace wex {

DensityMatrix DensityMatrix::from(const CMatrix& m, const Tolerances& tol) {
	return from(HermitianMatrix::from(m, tol), tol);
}

DensityMatrix DensityMatrix::from(const HermitianMatrix& m, const Tolerances& tol) {
	const double tr = m.trace();
	if (!(std::abs(tr - 1.0) <= tol.trace)) {
		std::ostringstream msg;
		msg.precision(17);
		msg << "density matrix trace " << tr << " differs from 1 by more than " << tol.trace;
		throw ValidationError(msg.str());
	}
	EigenDecomposition eig = eigh(m, tol);
	std::vector<double> values = eig.values.values();
	if (values.back() < -tol.psd) {
		std::ostringstream msg;
		msg << "density matrix has negative eigenvalue " << values.back() << " below -" << tol.psd;
		throw ValidationError(msg.str());
	}
	double total = 0.0;
	for (double& v : values) {
		v = std::max(v, 0.0);
		total += v;
	}
	for (double& v : values) {
		v /= total;
	}
	eig.values = Spectrum(std::move(values));
	return DensityMatrix(m, std::move(eig));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
	if (dim == 0) {
		throw ArgumentError("dimension must be >= 1");
	}
	std::vector<double> p(dim, 1.0 / static_cast<double>(dim));
	return diagonal(p);
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> p, const Tolerances& tol) {
	return from(HermitianMatrix::real_diagonal(p), tol);
}

DensityMatrix DensityMatrix::pure(const CVector& v) {
	const double n2 = v.squaredNorm();
	if (!(n2 > 0.0)) {
		throw ValidationError("pure state vector must be non-zero");
	}
	return from(HermitianMatrix::hermitian_part(v * v.adjoint() / n2));
}

Hamiltonian Hamiltonian::from(HermitianMatrix m, double kbt, std::optional<EnergyBounds> bounds,
                              const Tolerances& tol) {
	if (!(kbt > 0.0) || !std::isfinite(kbt)) {
		std::ostringstream msg;
		msg << "kBT must be positive and finite, got " << kbt;
		throw ValidationError(msg.str());
	}
	EigenDecomposition eig = eigh(m, tol);
	if (bounds) {
		if (!(bounds->lower >= 0.0 && bounds->lower < bounds->upper)) {
			std::ostringstream msg;
			msg << "energy bounds must satisfy 0 <= eps < delta, got (" << bounds->lower << ", "
			    << bounds->upper << ")";
			throw ValidationError(msg.str());
		}
		if (eig.values.min() < bounds->lower - tol.psd || eig.values.max() > bounds->upper + tol.psd) {
			std::ostringstream msg;
			msg << "Hamiltonian spectrum [" << eig.values.min() << ", " << eig.values.max()
			    << "] violates declared bounds [" << bounds->lower << ", " << bounds->upper << "]";
			throw ValidationError(msg.str());
		}
	}
	return Hamiltonian(std::move(m), std::move(eig), kbt, bounds);
}

Hamiltonian Hamiltonian::diagonal(std::span<const double> energies, double kbt, std::optional<EnergyBounds> bounds) {
	return from(HermitianMatrix::real_diagonal(energies), kbt, bounds);
}

PureBipartiteState PureBipartiteState::from(const CMatrix& amplitudes, const Tolerances& tol) {
	if (amplitudes.rows() == 0 || amplitudes.rows() != amplitudes.cols()) {
		throw ValidationError("bipartite amplitudes must form a square d x d matrix with d >= 1");
	}
	if (!amplitudes.allFinite()) {
		throw ValidationError("bipartite amplitudes contain non-finite entries");
	}
	const double norm = amplitudes.norm();
	if (!(std::abs(norm - 1.0) <= tol.construction)) {
		std::ostringstream msg;
		msg.precision(17);
		msg << "bipartite amplitudes have Frobenius norm " << norm << ", expected 1 within "
		    << tol.construction;
		throw ValidationError(msg.str());
	}
	return PureBipartiteState(amplitudes / norm);
}

DensityMatrix reorder_descending(const DensityMatrix& rho, const CMatrix& basis, const Tolerances& tol) {
	const auto d = static_cast<Eigen::Index>(rho.dim());
	if (basis.rows() != d || basis.cols() != d) {
		throw ArgumentError("basis must contain d vectors of length d");
	}
	const double defect = (basis.adjoint() * basis - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
	if (defect > tol.basis) {
		std::ostringstream msg;
		msg << "basis is not orthonormal: max |B^dagger B - I| = " << defect;
		throw ValidationError(msg.str());
	}
	const auto& p = rho.spectrum().values();
	return DensityMatrix::from(HermitianMatrix::hermitian_part(compose(basis, p)), tol);
}

DensityMatrix reorder_descending(const DensityMatrix& rho) {
	return DensityMatrix::diagonal(rho.spectrum().values());
}

DensityMatrix reduced_state(const PureBipartiteState& psi) {
	const CMatrix& a = psi.amplitudes();
	return DensityMatrix::from(HermitianMatrix::hermitian_part(a * a.adjoint()));
}

Hamiltonian two_level_hamiltonian(std::size_t dim, std::size_t k, double omega, double kbt) {
	if (dim < 2 || k > dim - 2) {
		std::ostringstream msg;
		msg << "two-level Hamiltonian needs 0 <= k <= d-2, got d=" << dim << ", k=" << k;
		throw ArgumentError(msg.str());
	}
	if (!(omega > 0.0) || !std::isfinite(omega)) {
		throw ArgumentError("omega must be positive and finite");
	}
	std::vector<double> energies(dim, 0.0);
	for (std::size_t i = 0; i <= k; ++i) {
		energies[i] = omega;
	}
	return Hamiltonian::diagonal(energies, kbt, EnergyBounds{0.0, omega});
}

} // namespace wex
