#pragma once

#include "wex/states.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace wex {

// Convex hull of finitely many extreme points, all of one dimension.
class FreeSet {
public:
	static FreeSet from(std::vector<DensityMatrix> extreme_points, std::string label = "custom");
	// {𝕀/d}, the free set of informational non-equilibrium.
	static FreeSet maximally_mixed(std::size_t dim);

	const std::vector<DensityMatrix>& extreme_points() const noexcept { return points_; }
	const std::string& label() const noexcept { return label_; }
	std::size_t dim() const { return points_.front().dim(); }
	std::size_t size() const noexcept { return points_.size(); }

private:
	FreeSet(std::vector<DensityMatrix> points, std::string label)
	    : points_(std::move(points)), label_(std::move(label)) {}

	std::vector<DensityMatrix> points_;
	std::string label_;
};

} // namespace wex
