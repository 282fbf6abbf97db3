// Irreducible characters as torus polynomials, by two independent routes:
// the Weyl alternating-sum quotient A_{lambda+rho} / A_rho, and (for G2) the
// Schur-polynomial formula in three variables with x1 x2 x3 = 1.  Quotients
// are certified by exact re-multiplication inside divide_exact.
#pragma once

#include "weylint/root_system.hpp"
#include "weylint/torus_polynomial.hpp"

#include <array>
#include <stdexcept>

namespace weylint {

struct Character {
	TorusPolynomial poly;
	Weight highest_weight;
	Int dimension;
};

// A_mu = sum over the Weyl group of sgn(w) e^{w(mu)}.  mu must be strictly
// dominant (regular): if some reflection fixes it, the sum collapses to 0.
inline TorusPolynomial alternating_sum(const RootSystem& rs, const WeylGroup& w, const Weight& mu)
{
	for (int i = 0; i < rs.rank; ++i)
		if (coroot_pairing(rs, mu, i) <= 0)
			throw std::invalid_argument("alternating_sum: weight lies on a Weyl wall");
	TorusPolynomial a(rs.rank);
	for (std::size_t k = 0; k < w.size(); ++k)
		a.add_term(stored_exponent(rs, w.apply(k, mu)), Rational(w.signs[k]));
	return a;
}

inline Character weyl_character(const RootSystem& rs, const WeylGroup& w, const Weight& lambda)
{
	if (!is_dominant(rs, lambda))
		throw std::invalid_argument("weyl_character: weight is not dominant");
	const Weight r = rho(rs);
	TorusPolynomial num = alternating_sum(rs, w, add(lambda, r));
	TorusPolynomial den = alternating_sum(rs, w, r);
	TorusPolynomial chi = divide_exact(num, den);
	Rational dim = 0;
	for (const auto& [e, c] : chi.terms())
		dim += c;
	if (denominator(dim) != 1 || dim <= 0)
		throw std::logic_error("character has non-positive-integer dimension");
	return Character{std::move(chi), lambda, numerator(dim)};
}

inline Int dimension(const Character& c) { return c.dimension; }

namespace detail {

// Bialternant numerator det(x_i^{a_j}) on three variables, expanded directly
// over the six permutations with x1 = e^{i theta_1}, x2 = e^{i theta_2},
// x3 = (x1 x2)^{-1}.  Exponents (p, q, s) of x1^p x2^q x3^s land on the
// stored lattice as (2(p - s), 2(q - s)).
inline TorusPolynomial three_var_alternant(const std::array<long, 3>& a)
{
	static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
	                                    {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
	static constexpr int sgn[6] = {1, 1, 1, -1, -1, -1};
	TorusPolynomial out(2);
	for (int t = 0; t < 6; ++t) {
		long p = a[perms[t][0]], q = a[perms[t][1]], s = a[perms[t][2]];
		out.add_term({2 * (p - s), 2 * (q - s)}, Rational(sgn[t]));
	}
	return out;
}

inline TorusPolynomial schur_st(long s, long t)
{
	TorusPolynomial num = three_var_alternant({s + 2, t + 1, 0});
	TorusPolynomial den = three_var_alternant({2, 1, 0}); // Vandermonde
	return divide_exact(num, den);
}

} // namespace detail

// chi_{a,b} = (S_{(a+2b+1, a+b+1)} - S_{(a+2b+1, b)}) / (S_{(1,1)} - S_{(1)})
inline Character schur_character_g2(long a, long b)
{
	if (a < 0 || b < 0)
		throw std::invalid_argument("schur_character_g2: negative label");
	TorusPolynomial num =
	    detail::schur_st(a + 2 * b + 1, a + b + 1) - detail::schur_st(a + 2 * b + 1, b);
	TorusPolynomial den = detail::schur_st(1, 1) - detail::schur_st(1, 0);
	TorusPolynomial chi = divide_exact(num, den);
	Rational dim = 0;
	for (const auto& [e, c] : chi.terms())
		dim += c;
	if (denominator(dim) != 1 || dim <= 0)
		throw std::logic_error("character has non-positive-integer dimension");
	Weight lam = {Rational(2 * a + 3 * b), Rational(a + 2 * b)}; // a*w1 + b*w2
	return Character{std::move(chi), std::move(lam), numerator(dim)};
}

} // namespace weylint
