// Weyl integration of class functions: for a trigonometric polynomial f on
// the maximal torus, the Haar integral over the group (volume normalized to
// 1) is constant_term(f * delta * conj(delta)) / |W|.  The raw torus integral
// over [0, 2pi]^r is (2pi)^r times the constant term.
#pragma once

#include "weylint/characters.hpp"
#include "weylint/root_system.hpp"

#include <stdexcept>

namespace weylint {

struct HaarIntegral {
	Rational unit_haar_value;  // integral over G, total volume 1
	Rational raw_coefficient;  // raw torus integral = raw_coefficient * pi^pi_power
	int pi_power = 0;
};

// delta = prod over positive roots of (e^{alpha/2} - e^{-alpha/2}).  The
// expansion coincides with the alternating sum A_rho up to sign (asserted).
// Its exponents sit on the weight lattice, which for G2 is the root lattice,
// so delta itself is integral there; in general only delta * conj(delta) is.
inline TorusPolynomial weyl_denominator(const RootSystem& rs)
{
	TorusPolynomial d = TorusPolynomial::constant(rs.rank, 1);
	for (const auto& alpha : rs.positive_roots) {
		ExponentVector e = stored_exponent(rs, scale(Rational(1, 2), alpha));
		TorusPolynomial factor(rs.rank);
		factor.add_term(e, Rational(1));
		ExponentVector ne(e.size());
		std::transform(e.begin(), e.end(), ne.begin(), std::negate<>());
		factor.add_term(ne, Rational(-1));
		d = d * factor;
	}
	WeylGroup w = weyl_group(rs);
	TorusPolynomial a_rho = alternating_sum(rs, w, rho(rs));
	if (d != a_rho && d != -a_rho)
		throw std::logic_error("weyl_denominator: product form disagrees with A_rho");
	return d;
}

// The Jacobian det([Ad(t^{-1}) - Id]|_p) restricted to the torus: delta * conj(delta).
inline TorusPolynomial jacobian(const RootSystem& rs)
{
	TorusPolynomial d = weyl_denominator(rs);
	TorusPolynomial j = d * d.conj();
	if (!j.is_integral())
		throw std::logic_error("jacobian: expansion left the integral lattice");
	return j;
}

inline bool is_weyl_invariant(const WeylGroup& w, const TorusPolynomial& p)
{
	for (std::size_t k = 0; k < w.size(); ++k)
		if (w.apply(k, p) != p)
			return false;
	return true;
}

inline HaarIntegral integrate_class_function(const RootSystem& rs, const WeylGroup& w,
                                             const TorusPolynomial& f)
{
	for (const auto& [e, c] : f.terms())
		if (!is_weight_lattice_exponent(rs, e))
			throw std::invalid_argument("integrate_class_function: exponent off the weight lattice");
	if (!is_weyl_invariant(w, f))
		throw std::invalid_argument("integrate_class_function: f is not Weyl-invariant");
	Rational ct = (f * jacobian(rs)).constant_term();
	HaarIntegral out;
	out.unit_haar_value = ct / Rational(static_cast<long>(w.size()));
	// integral over [0,2pi]^r = (2pi)^r * ct = 2^r * ct * pi^r
	out.pi_power = rs.rank;
	out.raw_coefficient = ct;
	for (int i = 0; i < rs.rank; ++i)
		out.raw_coefficient *= 2;
	return out;
}

} // namespace weylint
