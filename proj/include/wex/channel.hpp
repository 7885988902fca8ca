#pragma once

#include "wex/linalg.hpp"

#include <vector>

namespace wex {

// X ↦ Σ_m w_m U_m X U_m^†. Always unital and trace preserving.
struct MixedUnitaryChannel {
	std::vector<double> weights;
	std::vector<CMatrix> unitaries;

	CMatrix apply(const CMatrix& x) const;
};

} // namespace wex
