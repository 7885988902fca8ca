#pragma once

#include "wex/tolerances.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace wex {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Real values kept in non-increasing order.
class Spectrum {
public:
	Spectrum() = default;
	// Throws ValidationError if `values` is not non-increasing.
	explicit Spectrum(std::vector<double> values);
	static Spectrum sorted(std::vector<double> values);

	std::size_t size() const noexcept { return values_.size(); }
	double operator[](std::size_t i) const { return values_[i]; }
	const std::vector<double>& values() const noexcept { return values_; }
	double sum() const noexcept { return sum_; }
	double max() const { return values_.front(); }
	double min() const { return values_.back(); }

private:
	std::vector<double> values_;
	double sum_ = 0.0;
};

class HermitianMatrix {
public:
	// Rejects entries whose Hermitian asymmetry exceeds tol.construction,
	// then averages the input with its conjugate transpose.
	static HermitianMatrix from(const CMatrix& m, const Tolerances& tol = {});
	// (m + m^†)/2 without any asymmetry check; for internally computed products.
	static HermitianMatrix hermitian_part(const CMatrix& m);
	static HermitianMatrix real_diagonal(std::span<const double> diag);
	static HermitianMatrix identity(std::size_t dim);

	std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
	const CMatrix& matrix() const noexcept { return m_; }
	double trace() const { return m_.trace().real(); }

private:
	explicit HermitianMatrix(CMatrix m) : m_(std::move(m)) {}
	CMatrix m_;
};

struct EigenDecomposition {
	Spectrum values;
	// Column i is the eigenvector of values[i].
	CMatrix vectors;
};

EigenDecomposition eigh(const HermitianMatrix& m, const Tolerances& tol = {});

// V diag(f(λ)) V^†. Throws DomainError if f is not finite at some eigenvalue.
HermitianMatrix herm_func(const HermitianMatrix& m, const std::function<double(double)>& f,
                          const Tolerances& tol = {});
HermitianMatrix herm_func(const EigenDecomposition& eig, const std::function<double(double)>& f);

// V diag(values) V^† for arbitrary real values (no ordering assumed).
CMatrix compose(const CMatrix& vectors, std::span<const double> values);

// Σ|λ_i| of a Hermitian matrix.
double trace_norm(const CMatrix& hermitian);
// ½‖a - b‖₁.
double trace_distance(const CMatrix& a, const CMatrix& b);

double unitarity_defect(const CMatrix& u);

} // namespace wex
