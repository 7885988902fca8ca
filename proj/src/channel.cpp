#include "wex/channel.hpp"

namespace wex {

CMatrix MixedUnitaryChannel::apply(const CMatrix& x) const {
	CMatrix out = CMatrix::Zero(x.rows(), x.cols());
	for (std::size_t m = 0; m < weights.size(); ++m) {
		out += weights[m] * (unitaries[m] * x * unitaries[m].adjoint());
	}
	return out;
}

} // namespace wex
