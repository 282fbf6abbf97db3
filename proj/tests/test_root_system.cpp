#include "test_helpers.hpp"

#include "weylint/root_system.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace weylint;

namespace {

Weight w2(long a, long b) { return {Rational(a), Rational(b)}; }

} // namespace

TEST_CASE("G2 root data")
{
	RootSystem g2 = build_g2();
	CHECK(g2.rank == 2);
	CHECK(g2.gram[0][0] == 1);
	CHECK(g2.gram[1][1] == 3);
	CHECK(g2.gram[0][1] == Rational(-3, 2));
	CHECK(g2.gram[1][0] == Rational(-3, 2));

	std::set<Weight> expected = {w2(1, 0), w2(3, 1), w2(2, 1), w2(3, 2), w2(1, 1), w2(0, 1)};
	std::set<Weight> actual(g2.positive_roots.begin(), g2.positive_roots.end());
	CHECK(actual == expected);

	CHECK(g2.fundamental_weights[0] == w2(2, 1));
	CHECK(g2.fundamental_weights[1] == w2(3, 2));

	// defining property <w_i, a_j^vee> = delta_ij
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			CHECK(coroot_pairing(g2, g2.fundamental_weights[i], j) == (i == j ? 1 : 0));

	// every positive root is a nonnegative integer combination of simple roots
	for (const auto& a : g2.positive_roots)
		for (const auto& c : a) {
			CHECK(c >= 0);
			CHECK(denominator(c) == 1);
		}

	// short roots have squared length 1, long roots 3
	for (const auto& a : g2.positive_roots) {
		Rational n = norm_sq(g2, a);
		CHECK((n == 1 || n == 3));
	}
	CHECK(norm_sq(g2, w2(1, 0)) == 1);
	CHECK(norm_sq(g2, w2(1, 1)) == 1);
	CHECK(norm_sq(g2, w2(2, 1)) == 1);
	CHECK(norm_sq(g2, w2(3, 1)) == 3);
	CHECK(norm_sq(g2, w2(3, 2)) == 3);
	CHECK(norm_sq(g2, w2(0, 1)) == 3);
}

TEST_CASE("Weyl group of G2")
{
	RootSystem g2 = build_g2();
	WeylGroup w = weyl_group(g2);
	CHECK(w.size() == 12);

	int plus = 0, minus = 0;
	for (int s : w.signs)
		(s == 1 ? plus : minus)++;
	CHECK(plus == 6);
	CHECK(minus == 6);

	// every element preserves the Gram form: M^T G M = G
	for (std::size_t k = 0; k < w.size(); ++k) {
		for (int i = 0; i < 2; ++i)
			for (int j = 0; j < 2; ++j) {
				Weight ei = w.apply(k, g2.simple_roots[i]);
				Weight ej = w.apply(k, g2.simple_roots[j]);
				CHECK(inner(g2, ei, ej) == g2.gram[i][j]);
			}
	}

	// w(R) = R for R = R+ union -R+
	std::set<Weight> all_roots;
	for (const auto& a : g2.positive_roots) {
		all_roots.insert(a);
		all_roots.insert(scale(Rational(-1), a));
	}
	for (std::size_t k = 0; k < w.size(); ++k) {
		std::set<Weight> image;
		for (const auto& a : all_roots)
			image.insert(w.apply(k, a));
		CHECK(image == all_roots);
	}
}

TEST_CASE("Weyl group of A1")
{
	RootSystem a1 = build_a1();
	WeylGroup w = weyl_group(a1);
	CHECK(w.size() == 2);
	CHECK(w.apply(1, a1.simple_roots[0]) == scale(Rational(-1), a1.simple_roots[0]));
}

TEST_CASE("rho")
{
	RootSystem g2 = build_g2();
	Weight r = rho(g2);
	CHECK(r == w2(5, 3));
	CHECK(r == add(g2.fundamental_weights[0], g2.fundamental_weights[1]));
	CHECK(norm_sq(g2, r) == 7);
	for (int i = 0; i < 2; ++i)
		CHECK(coroot_pairing(g2, r, i) == 1);

	RootSystem a1 = build_a1();
	CHECK(rho(a1) == Weight{Rational(1, 2)});
}

TEST_CASE("symmetry of the Gram pairing")
{
	RootSystem g2 = build_g2();
	Weight u = w2(3, -2), v = w2(-1, 4);
	CHECK(inner(g2, u, v) == inner(g2, v, u));
}

TEST_CASE("dominant weight scan")
{
	RootSystem g2 = build_g2();

	// |rho|^2 = 7; a bound just above admits only lambda = 0
	auto tiny = dominant_weights_below(g2, Rational(8));
	REQUIRE(tiny.size() == 1);
	CHECK(tiny[0] == w2(0, 0));

	// |omega_1 + rho|^2 = 13
	auto small = dominant_weights_below(g2, Rational(13));
	REQUIRE(small.size() == 2);
	CHECK(small[0] == w2(0, 0));
	CHECK(small[1] == g2.fundamental_weights[0]);

	// graded: |lambda + rho|^2 nondecreasing
	Weight r = rho(g2);
	auto many = dominant_weights_below(g2, Rational(200));
	for (std::size_t i = 1; i < many.size(); ++i)
		CHECK(norm_sq(g2, add(many[i - 1], r)) <= norm_sq(g2, add(many[i], r)));

	CHECK_THROWS_AS(dominant_weights_below(g2, Rational(0)), std::invalid_argument);
}

TEST_CASE("presets by name")
{
	CHECK(root_system_by_name("G2").has_value());
	CHECK(root_system_by_name("A1").has_value());
	CHECK(root_system_by_name("A2").has_value());
	CHECK_FALSE(root_system_by_name("E8").has_value());
}
