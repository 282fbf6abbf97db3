// Floating-point cross-check for the exact Haar integrals.  The rectangle
// rule on a uniform periodic grid is the discrete Fourier projection, so it
// is exact (up to rounding) for trigonometric polynomials whose band limit
// fits inside the grid; a discrepancy past 1e-9 indicates a bug, not
// quadrature error.
#pragma once

#include "weylint/integration.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace weylint {

struct QuadratureCheck {
	double quadrature = 0.0;
	double exact = 0.0;
	double abs_error = 0.0;
	bool pass = false;
};

inline constexpr double kQuadratureTolerance = 1e-9;

// Rectangle-rule average of eval(f * delta * conj(delta)) / |W| over the
// grid^rank lattice on [0, 2pi)^rank, compared against the exact unit-Haar
// value.  Refuses grids too small for the integrand's band limit rather than
// returning an aliased value.
inline QuadratureCheck verify_quadrature(const RootSystem& rs, const WeylGroup& w,
                                         const TorusPolynomial& f, int grid = 128)
{
	TorusPolynomial integrand = f * jacobian(rs);
	const auto band = integrand.max_abs_exponent();
	if (grid < 2 * band + 2)
		throw std::invalid_argument("verify_quadrature: grid too small for band limit " +
		                            std::to_string(band));
	const Rational exact_rat = integrate_class_function(rs, w, f).unit_haar_value;
	const double exact = static_cast<double>(exact_rat);

	const double step = 2.0 * std::numbers::pi / grid;
	double sum = 0.0;
	std::vector<double> theta(rs.rank, 0.0);
	std::vector<int> idx(rs.rank, 0);
	while (true) {
		for (int i = 0; i < rs.rank; ++i)
			theta[i] = idx[i] * step;
		sum += integrand.eval(theta).real();
		int pos = 0;
		while (pos < rs.rank) {
			if (++idx[pos] < grid)
				break;
			idx[pos] = 0;
			++pos;
		}
		if (pos == rs.rank)
			break;
	}
	double cells = 1.0;
	for (int i = 0; i < rs.rank; ++i)
		cells *= grid;

	QuadratureCheck out;
	out.quadrature = sum / cells / static_cast<double>(w.size());
	out.exact = exact;
	out.abs_error = std::abs(out.quadrature - exact);
	out.pass = out.abs_error <= kQuadratureTolerance;
	return out;
}

} // namespace weylint
