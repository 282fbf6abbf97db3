// End-to-end checks of the installed command surface.  The binary path is
// injected by CMake.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
	int exit_code = -1;
	std::string output;
};

RunResult run(const std::string& args)
{
	std::string cmd = std::string(WEYLINT_CLI_PATH) + " " + args + " 2>&1";
	FILE* pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	RunResult r;
	std::array<char, 512> buf;
	while (fgets(buf.data(), buf.size(), pipe))
		r.output += buf.data();
	int status = pclose(pipe);
	r.exit_code = WEXITSTATUS(status);
	return r;
}

bool contains(const std::string& haystack, const std::string& needle)
{
	return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("stability G2")
{
	RunResult r = run("stability G2");
	CHECK(r.exit_code == 0);
	CHECK(contains(r.output, "48*pi^2"));
	CHECK(contains(r.output, "DYNAMICALLY UNSTABLE"));
}

TEST_CASE("stability A1")
{
	RunResult r = run("stability A1");
	CHECK(r.exit_code == 0);
	CHECK(contains(r.output, "NO NEUTRAL DIRECTION"));
}

TEST_CASE("eigenvalue output")
{
	CHECK(run("eigenvalue G2 1 0").output == "-6\n");
	CHECK(run("eigenvalue G2 1 0 --scale killing").output == "-1/2\n");
}

TEST_CASE("character output")
{
	RunResult r = run("character G2 1 0 --form cosine");
	CHECK(r.exit_code == 0);
	CHECK(r.output == "2cos(θ1) + 2cos(θ2) + 2cos(θ1+θ2) + 1\n");
}

TEST_CASE("integrate output")
{
	RunResult r = run("integrate G2 --expr 'chi3 1 0'");
	CHECK(r.exit_code == 0);
	CHECK(contains(r.output, "unit Haar: 1"));
	CHECK(contains(r.output, "48*pi^2"));

	RunResult one = run("integrate A2 --expr one");
	CHECK(one.exit_code == 0);
	CHECK(contains(one.output, "unit Haar: 1"));
}

TEST_CASE("verify output")
{
	RunResult r = run("verify G2 --expr 'chi3 1 0' --grid 128");
	CHECK(r.exit_code == 0);
	CHECK(contains(r.output, "PASS"));
}

TEST_CASE("exit codes distinguish usage from computation failures")
{
	CHECK(run("eigenvalue SO3 1 0").exit_code == 2);        // unknown group
	CHECK(run("nonsense").exit_code == 2);                  // unknown subcommand
	CHECK(run("integrate G2 --expr 'chi 1'").exit_code == 2); // wrong label count
	// grid below the integrand band limit: precondition failure
	CHECK(run("verify G2 --expr 'chi3 1 0' --grid 4").exit_code == 3);
}

TEST_CASE("stability --json emits the report schema")
{
	RunResult r = run("stability G2 --json");
	CHECK(r.exit_code == 0);
	CHECK(contains(r.output, "\"verdict\""));
	CHECK(contains(r.output, "DynamicallyUnstable"));
	CHECK(contains(r.output, "\"pi_power\": 2"));
}
