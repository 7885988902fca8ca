#pragma once

#include "wex/channel.hpp"
#include "wex/errors.hpp"
#include "wex/linalg.hpp"
#include "wex/states.hpp"
#include "wex/tolerances.hpp"

#include <cstddef>
#include <vector>

namespace wex {

struct MajorisationReport {
	bool holds = true;
	// Σ_{i≤k} (x_i↓ - y_i↓) for k = 0..d-2; the full sum is identically zero.
	std::vector<double> partial_sum_gaps;
	std::size_t worst_k = 0;
	// Some gap lies within ±tol.verdict of zero.
	bool boundary = false;
};

MajorisationReport majorises(const Spectrum& x, const Spectrum& y, const Tolerances& tol = {});
MajorisationReport majorises(const DensityMatrix& rho, const DensityMatrix& sigma, const Tolerances& tol = {});

class NotConvertibleError : public PreconditionError {
public:
	NotConvertibleError(const std::string& what, MajorisationReport report)
	    : PreconditionError(what), report_(std::move(report)) {}
	const MajorisationReport& report() const noexcept { return report_; }

private:
	MajorisationReport report_;
};

// x_i' = t x_i + (1-t) x_j, x_j' = (1-t) x_i + t x_j.
struct TTransform {
	double t = 1.0;
	std::size_t i = 0;
	std::size_t j = 0;
};

void apply(const TTransform& tr, std::vector<double>& x);
RMatrix to_matrix(const TTransform& tr, std::size_t dim);

// At most d-1 transforms carrying x to y. Each step takes the largest index a
// with x_a > y_a and the smallest b > a with x_b < y_b, and moves
// min(x_a - y_a, y_b - x_b) of weight from a to b; x stays sorted throughout.
// Throws NotConvertibleError when x does not majorise y.
std::vector<TTransform> t_transform_chain(const Spectrum& x, const Spectrum& y, const Tolerances& tol = {});

struct BirkhoffTerm {
	double weight = 0.0;
	// Row i of the permutation matrix has its one in column permutation[i].
	std::vector<std::size_t> permutation;
};

// Greedy Birkhoff–von Neumann decomposition: repeatedly pick a perfect
// matching on the positive support and peel off its smallest entry.
// At most (d-1)^2 + 1 terms.
std::vector<BirkhoffTerm> birkhoff_decompose(const RMatrix& doubly_stochastic, const Tolerances& tol = {});
RMatrix permutation_matrix(const std::vector<std::size_t>& permutation);

struct ConversionCertificate {
	RMatrix doubly_stochastic;
	std::vector<BirkhoffTerm> birkhoff_terms;
	// Eigenbases of ρ and σ, columns ordered by non-increasing eigenvalue.
	CMatrix basis_in;
	CMatrix basis_out;

	// Kraus unitaries V P_m U^† with their Birkhoff weights.
	MixedUnitaryChannel channel() const;
	CMatrix apply(const CMatrix& x) const;
};

// Throws ValidationError naming the first broken invariant.
void validate(const ConversionCertificate& cert, const Tolerances& tol = {});

ConversionCertificate build_mixed_unitary_certificate(const DensityMatrix& rho, const DensityMatrix& sigma,
                                                      const Tolerances& tol = {});

} // namespace wex
