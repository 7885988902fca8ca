#include "wex/free_set.hpp"

#include "wex/errors.hpp"

namespace wex {

FreeSet FreeSet::from(std::vector<DensityMatrix> extreme_points, std::string label) {
	if (extreme_points.empty()) {
		throw ArgumentError("free set needs at least one extreme point");
	}
	const std::size_t d = extreme_points.front().dim();
	for (const auto& p : extreme_points) {
		if (p.dim() != d) {
			throw ArgumentError("free set extreme points have mismatched dimensions");
		}
	}
	return FreeSet(std::move(extreme_points), std::move(label));
}

FreeSet FreeSet::maximally_mixed(std::size_t dim) {
	return FreeSet({DensityMatrix::maximally_mixed(dim)}, "max-mixed");
}

} // namespace wex
