#include "test_helpers.hpp"

#include "weylint/characters.hpp"

#include <doctest.h>

using namespace weylint;
using testutil::chi10_by_hand;
using testutil::weyl_dimension;

TEST_CASE("alternating sums")
{
	RootSystem g2 = build_g2();
	WeylGroup w = weyl_group(g2);
	Weight r = rho(g2);

	TorusPolynomial a_rho = alternating_sum(g2, w, r);
	CHECK(a_rho.term_count() == 12);
	int plus = 0, minus = 0;
	for (const auto& [e, c] : a_rho.terms()) {
		CHECK((c == 1 || c == -1));
		(c == 1 ? plus : minus)++;
	}
	CHECK(plus == 6);
	CHECK(minus == 6);

	// mu = rho + omega_1: again 12 distinct unit terms, six of each sign
	TorusPolynomial a_mu = alternating_sum(g2, w, add(r, g2.fundamental_weights[0]));
	CHECK(a_mu.term_count() == 12);

	// a wall weight is rejected (stabilized by a reflection, sum would vanish)
	CHECK_THROWS_AS(alternating_sum(g2, w, g2.fundamental_weights[0]), std::invalid_argument);

	RootSystem a1 = build_a1();
	WeylGroup wa1 = weyl_group(a1);
	TorusPolynomial a_rho_a1 = alternating_sum(a1, wa1, rho(a1));
	CHECK(a_rho_a1 == TorusPolynomial::monomial({1}) - TorusPolynomial::monomial({-1}));
}

TEST_CASE("Weyl-route characters on G2")
{
	RootSystem g2 = build_g2();
	WeylGroup w = weyl_group(g2);

	Character triv = weyl_character(g2, w, {Rational(0), Rational(0)});
	CHECK(triv.poly == TorusPolynomial::constant(2, 1));
	CHECK(triv.dimension == 1);

	Character chi10 = weyl_character(g2, w, g2.fundamental_weights[0]);
	CHECK(chi10.poly == chi10_by_hand());
	CHECK(chi10.dimension == 7);
	CHECK(chi10.poly.render_cosine() == testutil::kChi10String);
	CHECK(chi10.poly.eval({0.0, 0.0}).real() == doctest::Approx(7.0));

	Character adj = weyl_character(g2, w, g2.fundamental_weights[1]);
	CHECK(adj.dimension == 14);
}

TEST_CASE("Schur-route characters")
{
	CHECK(schur_character_g2(0, 0).poly == TorusPolynomial::constant(2, 1));
	CHECK(schur_character_g2(1, 0).poly == chi10_by_hand());
	CHECK(schur_character_g2(0, 1).dimension == 14);
	CHECK_THROWS_AS(schur_character_g2(-1, 0), std::invalid_argument);
}

TEST_CASE("route equivalence for 0 <= a,b <= 2")
{
	RootSystem g2 = build_g2();
	WeylGroup w = weyl_group(g2);
	for (long a = 0; a <= 2; ++a)
		for (long b = 0; b <= 2; ++b) {
			Weight lam = add(scale(Rational(a), g2.fundamental_weights[0]),
			                 scale(Rational(b), g2.fundamental_weights[1]));
			Character via_weyl = weyl_character(g2, w, lam);
			Character via_schur = schur_character_g2(a, b);
			CHECK(via_weyl.poly == via_schur.poly);
			CHECK(via_weyl.dimension == via_schur.dimension);
		}
}

TEST_CASE("character invariants over the scan range")
{
	RootSystem g2 = build_g2();
	WeylGroup w = weyl_group(g2);
	for (const auto& lam : dominant_weights_below(g2, Rational(60))) {
		Character chi = weyl_character(g2, w, lam);
		// self-duality: real character
		CHECK(chi.poly.is_real());
		// Weyl invariance
		for (std::size_t k = 0; k < w.size(); ++k)
			CHECK(w.apply(k, chi.poly) == chi.poly);
		// dimension agrees with the Weyl dimension formula
		Rational d = weyl_dimension(g2, lam);
		CHECK(denominator(d) == 1);
		CHECK(chi.dimension == numerator(d));
		CHECK(chi.dimension > 0);
	}
}

TEST_CASE("chi_{1,0}^2 decomposes with nonnegative integer multiplicities")
{
	RootSystem g2 = build_g2();
	WeylGroup w = weyl_group(g2);
	TorusPolynomial rem = chi10_by_hand() * chi10_by_hand();
	// 7 x 7 = 27 + 14 + 7 + 1 for G2
	struct Piece { long a, b; Rational mult; };
	for (const auto& [lam_ab, expect] :
	     std::vector<std::pair<std::pair<long, long>, int>>{
	         {{2, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 1}}) {
		Weight lam = add(scale(Rational(lam_ab.first), g2.fundamental_weights[0]),
		                 scale(Rational(lam_ab.second), g2.fundamental_weights[1]));
		Character chi = weyl_character(g2, w, lam);
		rem -= Rational(expect) * chi.poly;
	}
	CHECK(rem.is_zero());
}
