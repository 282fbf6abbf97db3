// Shared fixtures for the unit tests: paper reference strings, small random
// polynomial generators, and independent oracles.
#pragma once

#include "weylint/characters.hpp"
#include "weylint/root_system.hpp"
#include "weylint/torus_polynomial.hpp"

#include <random>

namespace testutil {

using namespace weylint;

// chi_{1,0} built straight from the known weight list of the 7-dimensional
// representation, bypassing both character routes.
inline TorusPolynomial chi10_by_hand()
{
	TorusPolynomial p = TorusPolynomial::constant(2, 1);
	for (auto [m, n] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
		p.add_term({2 * m, 2 * n}, 1);
		p.add_term({-2 * m, -2 * n}, 1);
	}
	return p;
}

inline const char* kChi10String = "2cos(θ1) + 2cos(θ2) + 2cos(θ1+θ2) + 1";

// The 12-term Weyl denominator of G2 as printed in the standard theta
// coordinates.
inline const char* kDeltaG2String =
    "2cos(θ1+3θ2) - 2cos(3θ1+θ2) + 2cos(2θ1-θ2) - 2cos(θ1-2θ2)"
    " + 2cos(3θ1+2θ2) - 2cos(2θ1+3θ2)";

inline TorusPolynomial random_polynomial(std::mt19937& rng, int rank, int max_terms = 8,
                                         int max_exp = 4, bool integral = true)
{
	std::uniform_int_distribution<int> nterms(0, max_terms);
	std::uniform_int_distribution<int> expo(-max_exp, max_exp);
	std::uniform_int_distribution<int> num(-5, 5);
	std::uniform_int_distribution<int> den(1, 4);
	TorusPolynomial p(rank);
	int n = nterms(rng);
	for (int t = 0; t < n; ++t) {
		ExponentVector e(rank);
		for (int i = 0; i < rank; ++i)
			e[i] = integral ? 2 * expo(rng) : expo(rng);
		p.add_term(e, Rational(num(rng), den(rng)));
	}
	return p;
}

// Weyl dimension formula, prod over positive roots of <lambda+rho, alpha> /
// <rho, alpha>: the independent dimension oracle.
inline Rational weyl_dimension(const RootSystem& rs, const Weight& lambda)
{
	const Weight r = rho(rs);
	const Weight lr = add(lambda, r);
	Rational d = 1;
	for (const auto& alpha : rs.positive_roots)
		d *= inner(rs, lr, alpha) / inner(rs, r, alpha);
	return d;
}

} // namespace testutil
