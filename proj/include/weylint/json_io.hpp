// JSON serialization for the CLI: polynomials as
// {rank, terms: [[[coords...], num, den], ...]}, rationals as {num, den},
// pi-power multiples as tagged values.
#pragma once

#include "weylint/stability.hpp"
#include "weylint/torus_polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace weylint {

using json = nlohmann::json;

inline json rational_to_json(const Rational& r)
{
	json j;
	// arbitrary-precision values fall back to decimal strings
	const Int num = numerator(r);
	const Int den = denominator(r);
	if (num >= std::numeric_limits<std::int64_t>::min() &&
	    num <= std::numeric_limits<std::int64_t>::max() &&
	    den <= std::numeric_limits<std::int64_t>::max()) {
		j["num"] = static_cast<std::int64_t>(num);
		j["den"] = static_cast<std::int64_t>(den);
	} else {
		j["num"] = num.str();
		j["den"] = den.str();
	}
	return j;
}

inline Rational rational_from_json(const json& j)
{
	auto part = [](const json& v) {
		return v.is_string() ? Int(v.get<std::string>()) : Int(v.get<std::int64_t>());
	};
	return Rational(part(j.at("num")), part(j.at("den")));
}

inline json polynomial_to_json(const TorusPolynomial& p)
{
	json terms = json::array();
	for (const auto& [e, c] : p.terms()) {
		json coords = json::array();
		for (auto x : e)
			coords.push_back(x);
		json r = rational_to_json(c);
		terms.push_back(json::array({coords, r["num"], r["den"]}));
	}
	return json{{"rank", p.rank()}, {"terms", terms}};
}

inline TorusPolynomial polynomial_from_json(const json& j)
{
	TorusPolynomial p(j.at("rank").get<int>());
	for (const auto& t : j.at("terms")) {
		ExponentVector e;
		for (const auto& x : t.at(0))
			e.push_back(x.get<std::int64_t>());
		p.add_term(e, rational_from_json(json{{"num", t.at(1)}, {"den", t.at(2)}}));
	}
	return p;
}

inline json weight_to_json(const Weight& w)
{
	json a = json::array();
	for (const auto& c : w)
		a.push_back(rational_to_json(c));
	return a;
}

inline json haar_integral_to_json(const HaarIntegral& h)
{
	return json{{"unit_haar", rational_to_json(h.unit_haar_value)},
	            {"raw_torus", json{{"coefficient", rational_to_json(h.raw_coefficient)},
	                               {"pi_power", h.pi_power}}}};
}

inline std::string raw_torus_string(const HaarIntegral& h)
{
	return to_string(h.raw_coefficient) + "*pi^" + std::to_string(h.pi_power);
}

inline json report_to_json(const StabilityReport& rep)
{
	json neutral = json::array();
	for (const auto& [w, e] : rep.neutral_weights)
		neutral.push_back(json{{"weight", weight_to_json(w)},
		                       {"eigenvalue", rational_to_json(e.value)},
		                       {"scale", "killing"}});
	json cubes = json::array();
	for (const auto& [w, h] : rep.cube_integrals)
		cubes.push_back(json{{"weight", weight_to_json(w)}, {"integral", haar_integral_to_json(h)}});
	const char* verdict = rep.verdict == Verdict::DynamicallyUnstable ? "DynamicallyUnstable"
	                      : rep.verdict == Verdict::InconclusiveIntegralVanishes
	                          ? "Inconclusive_IntegralVanishes"
	                          : "NoNeutralDirection";
	return json{{"group", rep.group},
	            {"einstein_constant", rational_to_json(rep.einstein_constant)},
	            {"neutral_weights", neutral},
	            {"cube_integrals", cubes},
	            {"verdict", verdict}};
}

} // namespace weylint
