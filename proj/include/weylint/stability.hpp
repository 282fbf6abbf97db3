// The dynamical-instability criterion as a decision procedure: scan for
// dominant weights whose Killing-scale Laplacian eigenvalue equals -2*Lambda,
// then integrate the cube of the corresponding character over the group.  A
// nonzero cube integral proves instability; a vanishing one decides nothing.
#pragma once

#include "weylint/integration.hpp"
#include "weylint/spectra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace weylint {

enum class Verdict { DynamicallyUnstable, InconclusiveIntegralVanishes, NoNeutralDirection };

inline const char* to_string(Verdict v)
{
	switch (v) {
	case Verdict::DynamicallyUnstable: return "DYNAMICALLY UNSTABLE";
	case Verdict::InconclusiveIntegralVanishes: return "INCONCLUSIVE (cube integral vanishes)";
	case Verdict::NoNeutralDirection: return "NO NEUTRAL DIRECTION";
	}
	return "?";
}

struct StabilityReport {
	std::string group;
	Rational einstein_constant;                           // Killing scale
	std::vector<std::pair<Weight, Eigenvalue>> neutral_weights; // Killing-scale eigenvalues
	std::vector<std::pair<Weight, HaarIntegral>> cube_integrals;
	Verdict verdict = Verdict::NoNeutralDirection;
};

// Einstein constant of the Killing-normalized bi-invariant metric on any
// compact simple group (Ric = g/4).
inline Rational default_einstein_constant() { return Rational(1, 4); }

// Dominant weights in the graded search space whose Killing-scale eigenvalue
// is exactly -2 * Lambda.
inline std::vector<std::pair<Weight, Eigenvalue>>
find_neutral_directions(const RootSystem& rs, const Rational& lambda_einstein,
                        const Rational& search_bound)
{
	if (lambda_einstein <= 0)
		throw std::invalid_argument("find_neutral_directions: Einstein constant must be positive");
	const Rational target = -2 * lambda_einstein;
	std::vector<std::pair<Weight, Eigenvalue>> out;
	for (const auto& lam : dominant_weights_below(rs, search_bound)) {
		Eigenvalue ev = killing_eigenvalue(rs, lam);
		if (ev.value == target)
			out.emplace_back(lam, ev);
	}
	return out;
}

// One-directional criterion: nonzero integral of chi^3 proves instability.
// Requires a real (conj-invariant) character so the cube is an honest
// eigenfunction integrand; refuses otherwise.
inline StabilityReport kroencke_test(const RootSystem& rs, const Weight& lambda,
                                     const Rational& lambda_einstein = default_einstein_constant(),
                                     const Rational& search_bound = 0)
{
	Rational bound = search_bound;
	if (bound == 0)
		bound = norm_sq(rs, add(lambda, rho(rs))) + 1;
	auto neutral = find_neutral_directions(rs, lambda_einstein, bound);
	bool ok = false;
	for (const auto& [w, e] : neutral)
		if (w == lambda)
			ok = true;
	if (!ok)
		throw std::invalid_argument("kroencke_test: weight is not a neutral direction");

	WeylGroup w = weyl_group(rs);
	Character chi = weyl_character(rs, w, lambda);
	if (!chi.poly.is_real())
		throw std::domain_error("kroencke_test: character is not real; criterion inapplicable");

	StabilityReport rep;
	rep.group = rs.name;
	rep.einstein_constant = lambda_einstein;
	rep.neutral_weights = {{lambda, killing_eigenvalue(rs, lambda)}};
	HaarIntegral cube = integrate_class_function(rs, w, chi.poly.pow(3));
	rep.verdict = cube.unit_haar_value != 0 ? Verdict::DynamicallyUnstable
	                                        : Verdict::InconclusiveIntegralVanishes;
	rep.cube_integrals.emplace_back(lambda, cube);
	return rep;
}

// Full pipeline: neutral scan, then the cube test on every neutral direction.
inline StabilityReport stability_scan(const RootSystem& rs, const Rational& search_bound,
                                      const Rational& lambda_einstein = default_einstein_constant())
{
	StabilityReport rep;
	rep.group = rs.name;
	rep.einstein_constant = lambda_einstein;
	rep.neutral_weights = find_neutral_directions(rs, lambda_einstein, search_bound);
	if (rep.neutral_weights.empty()) {
		rep.verdict = Verdict::NoNeutralDirection;
		return rep;
	}
	WeylGroup w = weyl_group(rs);
	rep.verdict = Verdict::InconclusiveIntegralVanishes;
	for (const auto& [lam, ev] : rep.neutral_weights) {
		Character chi = weyl_character(rs, w, lam);
		if (!chi.poly.is_real())
			throw std::domain_error("stability_scan: non-real character in neutral set");
		HaarIntegral cube = integrate_class_function(rs, w, chi.poly.pow(3));
		if (cube.unit_haar_value != 0)
			rep.verdict = Verdict::DynamicallyUnstable;
		rep.cube_integrals.emplace_back(lam, cube);
	}
	return rep;
}

} // namespace weylint
