// Laplacian eigenvalues of the bi-invariant metric: mu_lambda = |rho|^2 -
// |lambda + rho|^2, negative semidefinite sign convention.  Two metric scales
// are tracked: the unit-short-root normalization the root data is written in,
// and the Killing normalization (Einstein constant 1/4).
#pragma once

#include "weylint/root_system.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace weylint {

enum class MetricScale { FHUnitShortRoot, Killing };

struct Eigenvalue {
	Rational value;          // <= 0
	MetricScale scale = MetricScale::FHUnitShortRoot;
	Weight highest_weight;
};

// Scale factor k such that g_Killing = k * g_unit_short_root: the Casimir
// eigenvalue of the adjoint representation, <theta, theta + 2 rho>.  12 for
// G2, 4 for A1, 6 for A2.
inline Rational killing_rescale_factor(const RootSystem& rs)
{
	const Weight r = rho(rs);
	return inner(rs, rs.highest_root, add(rs.highest_root, add(r, r)));
}

inline Eigenvalue freudenthal_eigenvalue(const RootSystem& rs, const Weight& lambda)
{
	if (!is_dominant(rs, lambda))
		throw std::invalid_argument("freudenthal_eigenvalue: weight is not dominant");
	const Weight r = rho(rs);
	Rational mu = norm_sq(rs, r) - norm_sq(rs, add(lambda, r));
	return Eigenvalue{mu, MetricScale::FHUnitShortRoot, lambda};
}

// Metric rescaling g -> k*g sends eigenvalues mu -> mu/k.  The scale tag
// flips when k is exactly the Killing factor of the given root system.
inline Eigenvalue rescale(const RootSystem& rs, const Eigenvalue& e, const Rational& k)
{
	if (k <= 0)
		throw std::invalid_argument("rescale: k must be positive");
	Eigenvalue out = e;
	out.value = e.value / k;
	const Rational kf = killing_rescale_factor(rs);
	if (e.scale == MetricScale::FHUnitShortRoot && k == kf)
		out.scale = MetricScale::Killing;
	else if (e.scale == MetricScale::Killing && k == 1 / kf)
		out.scale = MetricScale::FHUnitShortRoot;
	return out;
}

inline Eigenvalue killing_eigenvalue(const RootSystem& rs, const Weight& lambda)
{
	return rescale(rs, freudenthal_eigenvalue(rs, lambda), killing_rescale_factor(rs));
}

// Nontrivial dominant weights minimizing |lambda + rho|^2 within the search
// bound (ties all returned), with their eigenvalues in the root-data scale.
inline std::vector<std::pair<Weight, Eigenvalue>>
smallest_nonzero_eigenvalue(const RootSystem& rs, const Rational& search_bound)
{
	std::vector<std::pair<Weight, Eigenvalue>> out;
	const Weight r = rho(rs);
	Rational best = 0;
	for (const auto& lam : dominant_weights_below(rs, search_bound)) {
		bool trivial = true;
		for (const auto& c : lam)
			if (c != 0)
				trivial = false;
		if (trivial)
			continue;
		Rational n = norm_sq(rs, add(lam, r));
		if (out.empty() || n < best) {
			best = n;
			out.clear();
		}
		if (n == best)
			out.emplace_back(lam, freudenthal_eigenvalue(rs, lam));
	}
	if (out.empty())
		throw std::domain_error("smallest_nonzero_eigenvalue: empty search space");
	return out;
}

} // namespace weylint
