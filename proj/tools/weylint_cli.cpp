// Command-line surface: exact eigenvalues, characters, Haar integrals, the
// stability verdict, and the floating-point quadrature cross-check.
//
// Exit codes: 0 success, 2 usage error (including unknown group names),
// 3 computation-precondition failure.

#include "weylint/characters.hpp"
#include "weylint/json_io.hpp"
#include "weylint/quadrature.hpp"
#include "weylint/spectra.hpp"
#include "weylint/stability.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

weylint::RootSystem resolve_group(const std::string& name)
{
	auto rs = weylint::root_system_by_name(name);
	if (!rs) {
		std::cerr << "unknown group '" << name << "' (expected G2, A1 or A2)\n";
		std::exit(kExitUsage);
	}
	return *rs;
}

weylint::Weight weight_from_labels(const weylint::RootSystem& rs, const std::vector<long>& labels)
{
	if (static_cast<int>(labels.size()) != rs.rank) {
		std::cerr << "expected " << rs.rank << " fundamental-weight labels for " << rs.name << "\n";
		std::exit(kExitUsage);
	}
	weylint::Weight lam(rs.rank, weylint::Rational(0));
	for (int i = 0; i < rs.rank; ++i) {
		if (labels[i] < 0) {
			std::cerr << "fundamental-weight labels must be nonnegative\n";
			std::exit(kExitUsage);
		}
		lam = weylint::add(lam, weylint::scale(weylint::Rational(labels[i]), rs.fundamental_weights[i]));
	}
	return lam;
}

// Named class-function expressions: one | chi a b | chi2 a b | chi3 a b
// (labels optional for rank-1 groups: chi a).
weylint::TorusPolynomial parse_expression(const weylint::RootSystem& rs, const std::string& expr)
{
	std::istringstream in(expr);
	std::string head;
	in >> head;
	if (head == "one")
		return weylint::TorusPolynomial::constant(rs.rank, 1);
	int power = 0;
	if (head == "chi")
		power = 1;
	else if (head == "chi2")
		power = 2;
	else if (head == "chi3")
		power = 3;
	else {
		std::cerr << "unknown expression '" << expr << "' (expected one, chi, chi2, chi3)\n";
		std::exit(kExitUsage);
	}
	std::vector<long> labels;
	long v;
	while (in >> v)
		labels.push_back(v);
	weylint::Weight lam = weight_from_labels(rs, labels);
	weylint::WeylGroup w = weylint::weyl_group(rs);
	weylint::Character chi = weylint::weyl_character(rs, w, lam);
	if (power == 2)
		return chi.poly * chi.poly.conj();
	return chi.poly.pow(power);
}

int cmd_eigenvalue(const std::string& group, long a, long b, const std::string& scale, bool as_json)
{
	auto rs = resolve_group(group);
	std::vector<long> labels = rs.rank == 1 ? std::vector<long>{a} : std::vector<long>{a, b};
	auto lam = weight_from_labels(rs, labels);
	weylint::Eigenvalue ev = scale == "killing" ? weylint::killing_eigenvalue(rs, lam)
	                                            : weylint::freudenthal_eigenvalue(rs, lam);
	if (as_json) {
		weylint::json j{{"group", group},
		                {"value", weylint::rational_to_json(ev.value)},
		                {"scale", scale}};
		std::cout << j.dump() << "\n";
	} else {
		std::cout << weylint::to_string(ev.value) << "\n";
	}
	return 0;
}

int cmd_character(const std::string& group, long a, long b, const std::string& form)
{
	auto rs = resolve_group(group);
	std::vector<long> labels = rs.rank == 1 ? std::vector<long>{a} : std::vector<long>{a, b};
	auto lam = weight_from_labels(rs, labels);
	weylint::WeylGroup w = weylint::weyl_group(rs);
	weylint::Character chi = weylint::weyl_character(rs, w, lam);
	if (form == "json") {
		weylint::json j = weylint::polynomial_to_json(chi.poly);
		j["dimension"] = chi.dimension.str();
		std::cout << j.dump() << "\n";
	} else {
		std::cout << chi.poly.render_cosine() << "\n";
	}
	return 0;
}

int cmd_integrate(const std::string& group, const std::string& expr, bool as_json)
{
	auto rs = resolve_group(group);
	auto f = parse_expression(rs, expr);
	weylint::WeylGroup w = weylint::weyl_group(rs);
	weylint::HaarIntegral h = weylint::integrate_class_function(rs, w, f);
	if (as_json) {
		std::cout << weylint::haar_integral_to_json(h).dump() << "\n";
	} else {
		std::cout << "unit Haar: " << weylint::to_string(h.unit_haar_value) << "\n";
		std::cout << "raw torus: " << weylint::raw_torus_string(h)
		          << "  (times a positive volume constant for the geometric integral)\n";
	}
	return 0;
}

int cmd_stability(const std::string& group, long bound, const std::string& lambda_override,
                  bool as_json)
{
	auto rs = resolve_group(group);
	weylint::Rational lambda = weylint::default_einstein_constant();
	if (!lambda_override.empty())
		lambda = weylint::parse_rational(lambda_override);
	weylint::StabilityReport rep = weylint::stability_scan(rs, weylint::Rational(bound), lambda);
	if (as_json) {
		std::cout << weylint::report_to_json(rep).dump(2) << "\n";
		return 0;
	}
	std::cout << "group: " << rep.group
	          << "   Einstein constant (Killing scale): " << weylint::to_string(rep.einstein_constant)
	          << "\n";
	if (rep.neutral_weights.empty()) {
		std::cout << "no dominant weight with eigenvalue -2*Lambda in the search range\n";
	} else {
		for (const auto& [wt, ev] : rep.neutral_weights) {
			std::cout << "neutral weight (";
			for (std::size_t i = 0; i < wt.size(); ++i)
				std::cout << (i ? "," : "") << weylint::to_string(wt[i]);
			std::cout << ") with Killing-scale eigenvalue " << weylint::to_string(ev.value) << "\n";
		}
		for (const auto& [wt, h] : rep.cube_integrals) {
			std::cout << "cube integral: unit Haar " << weylint::to_string(h.unit_haar_value)
			          << ", raw torus " << weylint::raw_torus_string(h) << "\n";
		}
	}
	std::cout << "verdict: " << weylint::to_string(rep.verdict) << "\n";
	return 0;
}

int cmd_verify(const std::string& group, const std::string& expr, int grid)
{
	auto rs = resolve_group(group);
	auto f = parse_expression(rs, expr);
	weylint::WeylGroup w = weylint::weyl_group(rs);
	weylint::QuadratureCheck q = weylint::verify_quadrature(rs, w, f, grid);
	std::printf("quadrature %.12f  exact %.12f  |error| %.3e  %s\n", q.quadrature, q.exact,
	            q.abs_error, q.pass ? "PASS" : "FAIL");
	return q.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"exact Laplacian spectra, characters and Weyl integration on compact simple Lie groups"};
	app.require_subcommand(1);

	std::string group, scale = "fh", form = "cosine", expr, lambda_override;
	long a = 0, b = 0, bound = 40;
	int grid = 128;
	bool as_json = false;

	auto* eig = app.add_subcommand("eigenvalue", "Laplacian eigenvalue of Gamma_{a,b}");
	eig->add_option("group", group)->required();
	eig->add_option("a", a)->required();
	eig->add_option("b", b);
	eig->add_option("--scale", scale)->check(CLI::IsMember({"killing", "fh"}));
	eig->add_flag("--json", as_json);

	auto* chr = app.add_subcommand("character", "irreducible character of Gamma_{a,b}");
	chr->add_option("group", group)->required();
	chr->add_option("a", a)->required();
	chr->add_option("b", b);
	chr->add_option("--form", form)->check(CLI::IsMember({"cosine", "json"}));

	auto* integ = app.add_subcommand("integrate", "Haar integral of a named class function");
	integ->add_option("group", group)->required();
	integ->add_option("--expr", expr, "one | chi a b | chi2 a b | chi3 a b")->required();
	integ->add_flag("--json", as_json);

	auto* stab = app.add_subcommand("stability", "neutral-direction scan and cube-integral verdict");
	stab->add_option("group", group)->required();
	stab->add_option("--bound", bound, "search bound on |lambda+rho|^2");
	stab->add_option("--einstein-constant", lambda_override,
	                 "override the Killing-scale Einstein constant (default 1/4)");
	stab->add_flag("--json", as_json);

	auto* ver = app.add_subcommand("verify", "float quadrature cross-check of an exact integral");
	ver->add_option("group", group)->required();
	ver->add_option("--expr", expr)->required();
	ver->add_option("--grid", grid);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int rc = app.exit(e);
		return rc == 0 ? 0 : kExitUsage;
	}

	try {
		if (eig->parsed())
			return cmd_eigenvalue(group, a, b, scale, as_json);
		if (chr->parsed())
			return cmd_character(group, a, b, form);
		if (integ->parsed())
			return cmd_integrate(group, expr, as_json);
		if (stab->parsed())
			return cmd_stability(group, bound, lambda_override, as_json);
		if (ver->parsed())
			return cmd_verify(group, expr, grid);
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitComputation;
	}
	return kExitUsage;
}
