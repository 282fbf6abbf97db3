// Finite Fourier (Laurent) polynomials on a rank-r torus with exact rational
// coefficients.
//
// Exponents are stored DOUBLED: the stored vector 2m stands for the lattice
// point m, so half-lattice exponents (the e^{alpha/2} factors of the Weyl
// denominator) stay in integer arithmetic.  A polynomial is "integral" when
// every stored coordinate is even.
#pragma once

#include "weylint/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylint {

using ExponentVector = std::vector<std::int64_t>;

// Graded lexicographic order (grade = coordinate sum).  Compatible with
// exponent addition, which is what makes leading-term division terminate.
struct GradedLexLess {
	bool operator()(const ExponentVector& a, const ExponentVector& b) const
	{
		auto ga = std::accumulate(a.begin(), a.end(), std::int64_t{0});
		auto gb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
		if (ga != gb)
			return ga < gb;
		return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
	}
};

class TorusPolynomial {
public:
	using TermMap = std::map<ExponentVector, Rational, GradedLexLess>;

	explicit TorusPolynomial(int rank) : rank_(rank)
	{
		if (rank < 1)
			throw std::invalid_argument("rank must be positive");
	}

	static TorusPolynomial zero(int rank) { return TorusPolynomial(rank); }

	static TorusPolynomial constant(int rank, const Rational& c)
	{
		TorusPolynomial p(rank);
		p.add_term(ExponentVector(rank, 0), c);
		return p;
	}

	// Single term c * e^{i <stored/2, theta>}.
	static TorusPolynomial monomial(ExponentVector stored, const Rational& c = 1)
	{
		TorusPolynomial p(static_cast<int>(stored.size()));
		p.add_term(std::move(stored), c);
		return p;
	}

	int rank() const { return rank_; }
	const TermMap& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t term_count() const { return terms_.size(); }

	void add_term(ExponentVector e, const Rational& c)
	{
		if (static_cast<int>(e.size()) != rank_)
			throw std::invalid_argument("exponent length != rank");
		auto it = terms_.find(e);
		if (it == terms_.end()) {
			if (c != 0)
				terms_.emplace(std::move(e), c);
		} else {
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	Rational coefficient(const ExponentVector& e) const
	{
		auto it = terms_.find(e);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	Rational constant_term() const { return coefficient(ExponentVector(rank_, 0)); }

	// True iff every stored coordinate is even, i.e. all exponents lie on the
	// unhalved lattice.
	bool is_integral() const
	{
		for (const auto& [e, c] : terms_)
			for (auto x : e)
				if (x % 2 != 0)
					return false;
		return true;
	}

	TorusPolynomial conj() const
	{
		TorusPolynomial r(rank_);
		for (const auto& [e, c] : terms_) {
			ExponentVector ne(e.size());
			std::transform(e.begin(), e.end(), ne.begin(), std::negate<>());
			r.terms_.emplace(std::move(ne), c);
		}
		return r;
	}

	bool is_real() const { return *this == conj(); }

	TorusPolynomial& operator+=(const TorusPolynomial& q)
	{
		check_rank(q);
		for (const auto& [e, c] : q.terms_)
			add_term(e, c);
		return *this;
	}

	TorusPolynomial& operator-=(const TorusPolynomial& q)
	{
		check_rank(q);
		for (const auto& [e, c] : q.terms_)
			add_term(e, -c);
		return *this;
	}

	friend TorusPolynomial operator+(TorusPolynomial p, const TorusPolynomial& q) { return p += q; }
	friend TorusPolynomial operator-(TorusPolynomial p, const TorusPolynomial& q) { return p -= q; }

	TorusPolynomial operator-() const
	{
		TorusPolynomial r(rank_);
		for (const auto& [e, c] : terms_)
			r.terms_.emplace(e, -c);
		return r;
	}

	friend TorusPolynomial operator*(const TorusPolynomial& p, const TorusPolynomial& q)
	{
		p.check_rank(q);
		TorusPolynomial r(p.rank_);
		ExponentVector sum(p.rank_);
		for (const auto& [e1, c1] : p.terms_)
			for (const auto& [e2, c2] : q.terms_) {
				for (int i = 0; i < p.rank_; ++i)
					sum[i] = e1[i] + e2[i];
				r.add_term(sum, c1 * c2);
			}
		return r;
	}

	friend TorusPolynomial operator*(const Rational& c, const TorusPolynomial& p)
	{
		TorusPolynomial r(p.rank_);
		if (c == 0)
			return r;
		for (const auto& [e, k] : p.terms_)
			r.terms_.emplace(e, c * k);
		return r;
	}

	TorusPolynomial pow(unsigned n) const
	{
		TorusPolynomial r = constant(rank_, 1);
		TorusPolynomial base = *this;
		while (n > 0) {
			if (n & 1u)
				r = r * base;
			base = base * base;
			n >>= 1u;
		}
		return r;
	}

	friend bool operator==(const TorusPolynomial& p, const TorusPolynomial& q)
	{
		return p.rank_ == q.rank_ && p.terms_ == q.terms_;
	}
	friend bool operator!=(const TorusPolynomial& p, const TorusPolynomial& q) { return !(p == q); }

	// Graded-lex maximal term; polynomial must be nonzero.
	std::pair<ExponentVector, Rational> leading_term() const
	{
		if (terms_.empty())
			throw std::logic_error("leading_term of zero polynomial");
		auto it = std::prev(terms_.end());
		return {it->first, it->second};
	}

	// Largest |coordinate| over all terms, in true (halved) units, rounded up.
	std::int64_t max_abs_exponent() const
	{
		std::int64_t m = 0;
		for (const auto& [e, c] : terms_)
			for (auto x : e)
				m = std::max(m, (std::abs(x) + 1) / 2);
		return m;
	}

	// Linear substitution on exponents: stored e -> mat * e.  Used for the
	// Weyl group action on torus coordinates.
	TorusPolynomial apply_exponent_map(const std::vector<std::vector<std::int64_t>>& mat) const
	{
		TorusPolynomial r(rank_);
		ExponentVector ne(rank_);
		for (const auto& [e, c] : terms_) {
			for (int i = 0; i < rank_; ++i) {
				std::int64_t s = 0;
				for (int j = 0; j < rank_; ++j)
					s += mat[i][j] * e[j];
				ne[i] = s;
			}
			r.add_term(ne, c);
		}
		return r;
	}

	// sum of coeff * exp(i <stored/2, theta>)
	std::complex<double> eval(const std::vector<double>& theta) const
	{
		if (static_cast<int>(theta.size()) != rank_)
			throw std::invalid_argument("theta length != rank");
		std::complex<double> acc{0.0, 0.0};
		for (const auto& [e, c] : terms_) {
			double phase = 0.0;
			for (int i = 0; i < rank_; ++i)
				phase += 0.5 * static_cast<double>(e[i]) * theta[i];
			acc += static_cast<double>(c) * std::exp(std::complex<double>(0.0, phase));
		}
		return acc;
	}

	std::string render_cosine() const;

	static TorusPolynomial parse_cosine(const std::string& text, int rank);

private:
	void check_rank(const TorusPolynomial& q) const
	{
		if (rank_ != q.rank_)
			throw std::invalid_argument("rank mismatch");
	}

	int rank_;
	TermMap terms_;
};

namespace detail {

// Representative of the pair {e, -e}: first nonzero stored coordinate positive.
inline bool cosine_representative(const ExponentVector& e)
{
	for (auto x : e)
		if (x != 0)
			return x > 0;
	return true;
}

inline std::string cosine_argument(const ExponentVector& stored)
{
	std::ostringstream out;
	bool first = true;
	for (std::size_t i = 0; i < stored.size(); ++i) {
		auto v = stored[i];
		if (v == 0)
			continue;
		if (!first)
			out << (v > 0 ? "+" : "-");
		else if (v < 0)
			out << "-";
		auto a = std::abs(v);
		// stored coordinate a stands for angle multiple a/2
		if (a % 2 == 0 && a / 2 > 1)
			out << a / 2;
		else if (a % 2 != 0 && a > 1)
			out << a;
		out << "θ" << (i + 1);
		if (a % 2 != 0)
			out << "/2";
		first = false;
	}
	return out.str();
}

} // namespace detail

inline std::string TorusPolynomial::render_cosine() const
{
	if (!is_real())
		throw std::domain_error("render_cosine: polynomial is not conj-invariant");
	if (terms_.empty())
		return "0";

	struct Piece {
		ExponentVector e;
		Rational amp; // coefficient in front of cos(...)
	};
	std::vector<Piece> pieces;
	for (const auto& [e, c] : terms_) {
		bool nonzero = std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x != 0; });
		if (!nonzero || !detail::cosine_representative(e))
			continue;
		pieces.push_back({e, 2 * c});
	}
	// grade ascending, descending lex within a grade; constant printed last
	std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
		auto ga = std::accumulate(a.e.begin(), a.e.end(), std::int64_t{0});
		auto gb = std::accumulate(b.e.begin(), b.e.end(), std::int64_t{0});
		if (ga != gb)
			return ga < gb;
		return b.e < a.e;
	});

	std::ostringstream out;
	bool first = true;
	auto emit = [&](const Rational& coef, const std::string& body) {
		Rational a = coef < 0 ? Rational(-coef) : coef;
		if (first) {
			if (coef < 0)
				out << "-";
			first = false;
		} else {
			out << (coef < 0 ? " - " : " + ");
		}
		if (body.empty()) {
			out << to_string(a);
		} else {
			if (a != 1)
				out << to_string(a);
			out << body;
		}
	};
	for (const auto& p : pieces)
		emit(p.amp, "cos(" + detail::cosine_argument(p.e) + ")");
	Rational c0 = constant_term();
	if (c0 != 0)
		emit(c0, "");
	return out.str();
}

namespace detail {

// Minimal recursive-descent reader for the render_cosine output.  Accepts
// either "θ" or "theta" as the variable stem.
class CosineParser {
public:
	CosineParser(const std::string& text, int rank) : rank_(rank)
	{
		for (char ch : text)
			if (!std::isspace(static_cast<unsigned char>(ch)))
				s_.push_back(ch);
	}

	TorusPolynomial parse()
	{
		TorusPolynomial p(rank_);
		if (s_ == "0")
			return p;
		bool neg = accept('-');
		parse_term(p, neg);
		while (pos_ < s_.size()) {
			if (accept('+'))
				parse_term(p, false);
			else if (accept('-'))
				parse_term(p, true);
			else
				fail("expected '+' or '-'");
		}
		return p;
	}

private:
	void parse_term(TorusPolynomial& p, bool neg)
	{
		Rational coef = 1;
		if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_]))))
			coef = parse_number();
		if (neg)
			coef = -coef;
		if (lookahead_is("cos(")) {
			pos_ += 4;
			ExponentVector e = parse_argument();
			if (!std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x != 0; }))
				fail("cos() of zero argument");
			Rational half = coef / 2;
			ExponentVector ne(e.size());
			std::transform(e.begin(), e.end(), ne.begin(), std::negate<>());
			p.add_term(e, half);
			p.add_term(ne, half);
		} else {
			p.add_term(ExponentVector(rank_, 0), coef);
		}
	}

	// Argument body up to ')'; returns stored (doubled) exponents.
	ExponentVector parse_argument()
	{
		ExponentVector e(rank_, 0);
		bool neg = accept('-');
		parse_angle(e, neg);
		while (!accept(')')) {
			if (accept('+'))
				parse_angle(e, false);
			else if (accept('-'))
				parse_angle(e, true);
			else
				fail("expected '+', '-' or ')' in cos argument");
		}
		return e;
	}

	void parse_angle(ExponentVector& e, bool neg)
	{
		std::int64_t mult = 1;
		if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			mult = parse_integer();
		std::size_t var = parse_variable();
		std::int64_t stored = 2 * mult;
		if (accept('/')) {
			if (parse_integer() != 2)
				fail("only /2 half-angles are supported");
			stored = mult;
		}
		e[var] += neg ? -stored : stored;
	}

	std::size_t parse_variable()
	{
		if (lookahead_is("theta"))
			pos_ += 5;
		else if (lookahead_is("\xce\xb8")) // UTF-8 θ
			pos_ += 2;
		else
			fail("expected θ");
		std::int64_t idx = parse_integer();
		if (idx < 1 || idx > rank_)
			fail("θ index out of range");
		return static_cast<std::size_t>(idx - 1);
	}

	Rational parse_number()
	{
		Int num = Int(std::to_string(parse_integer()));
		// A '/' here is a rational coefficient only if digits follow and the
		// result is not a half-angle marker; coefficients precede "cos" or
		// terminate the term, so "p/q" is unambiguous at term level.
		if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
		    std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
			++pos_;
			Int den = Int(std::to_string(parse_integer()));
			return Rational(num, den);
		}
		return Rational(num);
	}

	std::int64_t parse_integer()
	{
		if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
			fail("expected digit");
		std::int64_t v = 0;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			v = 10 * v + (s_[pos_++] - '0');
		return v;
	}

	bool lookahead_is(const std::string& w) const { return s_.compare(pos_, w.size(), w) == 0; }

	bool accept(char ch)
	{
		if (pos_ < s_.size() && s_[pos_] == ch) {
			++pos_;
			return true;
		}
		return false;
	}

	[[noreturn]] void fail(const std::string& why) const
	{
		throw std::invalid_argument("cosine parse error at offset " + std::to_string(pos_) + ": " + why);
	}

	std::string s_;
	std::size_t pos_ = 0;
	int rank_;
};

} // namespace detail

inline TorusPolynomial TorusPolynomial::parse_cosine(const std::string& text, int rank)
{
	return detail::CosineParser(text, rank).parse();
}

// Exact division q = num / den, certified by re-multiplication.  Leading-term
// descent in graded-lex order; throws if den does not divide num exactly.
inline TorusPolynomial divide_exact(const TorusPolynomial& num, const TorusPolynomial& den)
{
	if (den.is_zero())
		throw std::domain_error("division by zero polynomial");
	TorusPolynomial quotient(num.rank());
	TorusPolynomial remainder = num;
	const auto [dlead, dcoef] = den.leading_term();
	std::size_t guard = 0;
	while (!remainder.is_zero()) {
		if (++guard > 1000000)
			throw std::runtime_error("polynomial division does not terminate");
		const auto [rlead, rcoef] = remainder.leading_term();
		ExponentVector shift(rlead.size());
		for (std::size_t i = 0; i < shift.size(); ++i)
			shift[i] = rlead[i] - dlead[i];
		TorusPolynomial t = TorusPolynomial::monomial(shift, rcoef / dcoef);
		quotient += t;
		remainder -= t * den;
	}
	if (quotient * den != num)
		throw std::logic_error("polynomial division verification failed");
	return quotient;
}

} // namespace weylint
