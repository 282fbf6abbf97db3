// Root-system presets (G2, A1, A2), the rational Gram form on the dual of the
// Cartan subalgebra, Weyl-group generation, and the dictionary from weights to
// torus exponents.
//
// All weights are coordinate tuples in the SIMPLE-ROOT basis.  Inner products
// go through the Gram matrix of the simple roots; G2 uses the normalization
// with |alpha_1|^2 = 1 (short root), so <a1,a1>=1, <a2,a2>=3, <a1,a2>=-3/2.
#pragma once

#include "weylint/rational.hpp"
#include "weylint/torus_polynomial.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylint {

using Weight = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct RootSystem {
	std::string name;
	int rank = 0;
	RationalMatrix gram;                  // <alpha_i, alpha_j>
	std::vector<Weight> simple_roots;     // standard basis vectors
	std::vector<Weight> positive_roots;
	std::vector<Weight> fundamental_weights;
	Weight highest_root;                  // highest weight of the adjoint rep
	std::int64_t weyl_order = 0;
	// Torus dictionary: exponent of a weight v is exponent_map * v (true,
	// unhalved units).  Chosen per preset so the character strings come out in
	// the conventional theta coordinates.
	RationalMatrix exponent_map;
};

inline Rational inner(const RootSystem& rs, const Weight& v, const Weight& w)
{
	Rational s = 0;
	for (int i = 0; i < rs.rank; ++i)
		for (int j = 0; j < rs.rank; ++j)
			s += v[i] * rs.gram[i][j] * w[j];
	return s;
}

inline Rational norm_sq(const RootSystem& rs, const Weight& v) { return inner(rs, v, v); }

inline Weight add(const Weight& a, const Weight& b)
{
	Weight r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] + b[i];
	return r;
}

inline Weight scale(const Rational& c, const Weight& a)
{
	Weight r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = c * a[i];
	return r;
}

// <v, alpha_i^vee> = 2<v, alpha_i> / <alpha_i, alpha_i>
inline Rational coroot_pairing(const RootSystem& rs, const Weight& v, int i)
{
	return 2 * inner(rs, v, rs.simple_roots[i]) / rs.gram[i][i];
}

inline bool is_dominant(const RootSystem& rs, const Weight& v)
{
	for (int i = 0; i < rs.rank; ++i)
		if (coroot_pairing(rs, v, i) < 0)
			return false;
	return true;
}

// Half-sum of positive roots.
inline Weight rho(const RootSystem& rs)
{
	Weight r(rs.rank, Rational(0));
	for (const auto& a : rs.positive_roots)
		r = add(r, a);
	return scale(Rational(1, 2), r);
}

// Stored (doubled) torus exponent of a weight; throws if the image is not on
// the stored lattice.
inline ExponentVector stored_exponent(const RootSystem& rs, const Weight& v)
{
	ExponentVector e(rs.rank);
	for (int i = 0; i < rs.rank; ++i) {
		Rational x = 0;
		for (int j = 0; j < rs.rank; ++j)
			x += rs.exponent_map[i][j] * v[j];
		x *= 2;
		if (denominator(x) != 1)
			throw std::domain_error("weight does not map to the half-exponent lattice");
		e[i] = static_cast<std::int64_t>(numerator(x));
	}
	return e;
}

// Inverse of the dictionary: the weight whose stored exponent is e.
inline Weight weight_from_stored(const RootSystem& rs, const ExponentVector& e)
{
	const auto& m = rs.exponent_map;
	Weight v(rs.rank, Rational(0));
	if (rs.rank == 1) {
		v[0] = Rational(e[0]) / (2 * m[0][0]);
	} else if (rs.rank == 2) {
		Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
		v[0] = (m[1][1] * Rational(e[0]) - m[0][1] * Rational(e[1])) / (2 * det);
		v[1] = (-m[1][0] * Rational(e[0]) + m[0][0] * Rational(e[1])) / (2 * det);
	} else {
		throw std::logic_error("weight_from_stored only implemented for rank <= 2");
	}
	return v;
}

// Whether a stored exponent is a genuine character of the maximal torus,
// i.e. lands on the weight lattice (integer pairings with all coroots).  For
// G2 and A2 this means even stored coordinates; A1 admits odd ones.
inline bool is_weight_lattice_exponent(const RootSystem& rs, const ExponentVector& e)
{
	Weight v = weight_from_stored(rs, e);
	for (int i = 0; i < rs.rank; ++i)
		if (denominator(coroot_pairing(rs, v, i)) != 1)
			return false;
	return true;
}

struct WeylGroup {
	// Matrices act on simple-root coordinates (column vectors); Cartan
	// integrality makes every entry an integer.
	std::vector<IntMatrix> elements;
	std::vector<int> signs; // determinants, +1 or -1
	// Conjugated action on stored torus exponents, one matrix per element.
	std::vector<IntMatrix> exponent_actions;

	std::size_t size() const { return elements.size(); }

	Weight apply(std::size_t k, const Weight& v) const
	{
		const auto& m = elements[k];
		Weight r(v.size(), Rational(0));
		for (std::size_t i = 0; i < v.size(); ++i)
			for (std::size_t j = 0; j < v.size(); ++j)
				r[i] += m[i][j] * v[j];
		return r;
	}

	TorusPolynomial apply(std::size_t k, const TorusPolynomial& p) const
	{
		return p.apply_exponent_map(exponent_actions[k]);
	}
};

namespace detail {

inline IntMatrix identity_matrix(int n)
{
	IntMatrix m(n, std::vector<std::int64_t>(n, 0));
	for (int i = 0; i < n; ++i)
		m[i][i] = 1;
	return m;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b)
{
	int n = static_cast<int>(a.size());
	IntMatrix r(n, std::vector<std::int64_t>(n, 0));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < n; ++k)
				r[i][j] += a[i][k] * b[k][j];
	return r;
}

inline std::int64_t mat_det(const IntMatrix& m)
{
	if (m.size() == 1)
		return m[0][0];
	if (m.size() == 2)
		return m[0][0] * m[1][1] - m[0][1] * m[1][0];
	throw std::logic_error("determinant only needed for rank <= 2");
}

// Simple reflection s_i as an integer matrix on simple-root coordinates.
inline IntMatrix simple_reflection(const RootSystem& rs, int i)
{
	IntMatrix m = identity_matrix(rs.rank);
	for (int j = 0; j < rs.rank; ++j) {
		Rational cartan = 2 * rs.gram[i][j] / rs.gram[i][i]; // <a_j, a_i^vee>
		if (denominator(cartan) != 1)
			throw std::logic_error("non-integral Cartan pairing");
		m[i][j] -= static_cast<std::int64_t>(numerator(cartan));
	}
	return m;
}

// Conjugate a root-coordinate matrix into exponent coordinates:
// A = E * M * E^{-1}, required to be integral for the chosen dictionary.
inline IntMatrix exponent_action(const RootSystem& rs, const IntMatrix& m)
{
	int n = rs.rank;
	// E * M
	RationalMatrix em(n, std::vector<Rational>(n, Rational(0)));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < n; ++k)
				em[i][j] += rs.exponent_map[i][k] * m[k][j];
	// invert E (rank <= 2 presets)
	RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
	if (n == 1) {
		inv[0][0] = 1 / rs.exponent_map[0][0];
	} else if (n == 2) {
		Rational det = rs.exponent_map[0][0] * rs.exponent_map[1][1] -
		               rs.exponent_map[0][1] * rs.exponent_map[1][0];
		inv[0][0] = rs.exponent_map[1][1] / det;
		inv[0][1] = -rs.exponent_map[0][1] / det;
		inv[1][0] = -rs.exponent_map[1][0] / det;
		inv[1][1] = rs.exponent_map[0][0] / det;
	} else {
		throw std::logic_error("exponent_action only implemented for rank <= 2");
	}
	IntMatrix a(n, std::vector<std::int64_t>(n, 0));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			Rational x = 0;
			for (int k = 0; k < n; ++k)
				x += em[i][k] * inv[k][j];
			if (denominator(x) != 1)
				throw std::logic_error("Weyl action is not integral on the exponent lattice");
			a[i][j] = static_cast<std::int64_t>(numerator(x));
		}
	return a;
}

} // namespace detail

// Closure of the simple reflections under composition; capped at 10000
// elements to catch malformed input data.
inline WeylGroup weyl_group(const RootSystem& rs)
{
	constexpr std::size_t kCap = 10000;
	std::vector<IntMatrix> gens;
	gens.reserve(rs.rank);
	for (int i = 0; i < rs.rank; ++i)
		gens.push_back(detail::simple_reflection(rs, i));

	std::set<IntMatrix> seen;
	std::vector<IntMatrix> order;
	order.push_back(detail::identity_matrix(rs.rank));
	seen.insert(order[0]);
	for (std::size_t head = 0; head < order.size(); ++head) {
		for (const auto& g : gens) {
			IntMatrix next = detail::mat_mul(g, order[head]);
			if (seen.insert(next).second) {
				order.push_back(next);
				if (order.size() > kCap)
					throw std::runtime_error("Weyl closure exceeded cap; malformed root data");
			}
		}
	}

	WeylGroup w;
	for (const auto& m : order) {
		w.elements.push_back(m);
		w.signs.push_back(static_cast<int>(detail::mat_det(m)));
		w.exponent_actions.push_back(detail::exponent_action(rs, m));
	}
	if (rs.weyl_order != 0 && static_cast<std::int64_t>(w.size()) != rs.weyl_order)
		throw std::logic_error("Weyl group order disagrees with preset data");
	return w;
}

// G2 in the normalization |alpha_1|^2 = 1.  The torus dictionary sends
// alpha_1 to theta_2 and alpha_1 + alpha_2 to theta_1, which reproduces the
// conventional cosine strings for chi_{1,0} and the Weyl denominator.
inline RootSystem build_g2()
{
	RootSystem rs;
	rs.name = "G2";
	rs.rank = 2;
	rs.gram = {{Rational(1), Rational(-3, 2)}, {Rational(-3, 2), Rational(3)}};
	rs.simple_roots = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
	rs.positive_roots = {
	    {Rational(1), Rational(0)}, // a1
	    {Rational(3), Rational(1)}, // 3a1 + a2
	    {Rational(2), Rational(1)}, // 2a1 + a2
	    {Rational(3), Rational(2)}, // 3a1 + 2a2
	    {Rational(1), Rational(1)}, // a1 + a2
	    {Rational(0), Rational(1)}, // a2
	};
	rs.fundamental_weights = {{Rational(2), Rational(1)}, {Rational(3), Rational(2)}};
	rs.highest_root = {Rational(3), Rational(2)};
	rs.weyl_order = 12;
	// a1 -> (0,1), a2 -> (1,-1):  c1*a1 + c2*a2 -> (c2, c1 - c2)
	rs.exponent_map = {{Rational(0), Rational(1)}, {Rational(1), Rational(-1)}};
	return rs;
}

// A1 = su(2) in the standard normalization |alpha|^2 = 2; alpha -> theta.
inline RootSystem build_a1()
{
	RootSystem rs;
	rs.name = "A1";
	rs.rank = 1;
	rs.gram = {{Rational(2)}};
	rs.simple_roots = {{Rational(1)}};
	rs.positive_roots = {{Rational(1)}};
	rs.fundamental_weights = {{Rational(1, 2)}};
	rs.highest_root = {Rational(1)};
	rs.weyl_order = 2;
	rs.exponent_map = {{Rational(1)}};
	return rs;
}

// A2 = su(3), |alpha_i|^2 = 2.  Exponents are fundamental-weight coordinates
// so the full weight lattice (which contains thirds of root coordinates)
// stays integral.
inline RootSystem build_a2()
{
	RootSystem rs;
	rs.name = "A2";
	rs.rank = 2;
	rs.gram = {{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
	rs.simple_roots = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
	rs.positive_roots = {
	    {Rational(1), Rational(0)},
	    {Rational(0), Rational(1)},
	    {Rational(1), Rational(1)},
	};
	rs.fundamental_weights = {{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}};
	rs.highest_root = {Rational(1), Rational(1)};
	rs.weyl_order = 6;
	rs.exponent_map = {{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
	return rs;
}

inline std::optional<RootSystem> root_system_by_name(const std::string& name)
{
	if (name == "G2")
		return build_g2();
	if (name == "A1")
		return build_a1();
	if (name == "A2")
		return build_a2();
	return std::nullopt;
}

// All dominant weights lambda (nonnegative integer fundamental coordinates)
// with |lambda + rho|^2 <= bound, sorted by that norm.
inline std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Rational& bound)
{
	if (bound <= 0)
		throw std::invalid_argument("bound must be positive");
	const Weight r = rho(rs);
	// |lambda + rho|^2 is strictly increasing in each fundamental coordinate
	// (inner products of dominant weights with fundamental weights are > 0),
	// so per-axis caps give a finite box.
	std::vector<int> caps(rs.rank, 0);
	for (int i = 0; i < rs.rank; ++i) {
		Weight v = r;
		while (true) {
			v = add(v, rs.fundamental_weights[i]);
			if (norm_sq(rs, v) > bound)
				break;
			++caps[i];
			if (caps[i] > 10000)
				throw std::runtime_error("dominant weight scan cap exceeded");
		}
	}
	std::vector<std::pair<Rational, Weight>> found;
	std::vector<int> idx(rs.rank, 0);
	while (true) {
		Weight lam(rs.rank, Rational(0));
		for (int i = 0; i < rs.rank; ++i)
			lam = add(lam, scale(Rational(idx[i]), rs.fundamental_weights[i]));
		Rational n = norm_sq(rs, add(lam, r));
		if (n <= bound)
			found.emplace_back(n, lam);
		int pos = 0;
		while (pos < rs.rank) {
			if (++idx[pos] <= caps[pos])
				break;
			idx[pos] = 0;
			++pos;
		}
		if (pos == rs.rank)
			break;
	}
	std::stable_sort(found.begin(), found.end(),
	                 [](const auto& a, const auto& b) { return a.first < b.first; });
	std::vector<Weight> out;
	out.reserve(found.size());
	for (auto& [n, w] : found)
		out.push_back(std::move(w));
	return out;
}

} // namespace weylint
