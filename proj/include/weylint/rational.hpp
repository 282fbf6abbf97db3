// Exact rational coefficients for all lattice and character arithmetic.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace weylint {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r)
{
	if (denominator(r) == 1)
		return numerator(r).str();
	return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s)
{
	auto slash = s.find('/');
	if (slash == std::string::npos)
		return Rational(Int(s));
	Int num(s.substr(0, slash));
	Int den(s.substr(slash + 1));
	if (den == 0)
		throw std::invalid_argument("rational with zero denominator: " + s);
	return Rational(num, den);
}

} // namespace weylint
