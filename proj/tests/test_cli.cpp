#include "cli.hpp"

#include "schur/bounds.hpp"
#include "schur/catalog.hpp"
#include "schur/free_lie.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace schur;

namespace {

struct Result {
	int code;
	std::string out, err;
};

Result run(std::vector<std::string> args, const cli::Hooks &hooks = {})
{
	std::ostringstream out, err;
	int code = cli::run(args, out, err, hooks);
	return {code, out.str(), err.str()};
}

std::map<std::string, std::string> machine_fields(const std::string &text)
{
	std::map<std::string, std::string> out;
	std::istringstream in(text);
	std::string line;
	while (std::getline(in, line)) {
		auto space = line.find(' ');
		out.emplace(line.substr(0, space), space == std::string::npos ? "" : line.substr(space + 1));
	}
	return out;
}

struct TempFile {
	std::filesystem::path path;
	explicit TempFile(const std::string &contents)
	    : path(std::filesystem::temp_directory_path() /
	           ("schur_cli_" + std::to_string(std::rand()) + ".txt"))
	{
		std::ofstream(path) << contents;
	}
	~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("witt tables")
{
	auto r = run({"witt", "2", "4", "--format=machine"});
	CHECK(r.code == 0);
	CHECK(r.out == "format schur-machine 1\ncommand witt 2 4 --format=machine\nn 2\n"
	               "row 1 2 2\nrow 2 1 3\nrow 3 2 5\nrow 4 3 8\n");

	r = run({"--format=machine", "witt", "1", "3"});
	CHECK(r.out.find("row 1 1 1\nrow 2 0 1\nrow 3 0 1\n") != std::string::npos);

	r = run({"witt", "3", "3", "--format", "machine"});
	CHECK(r.out.find("row 1 3 3\nrow 2 3 6\nrow 3 8 14\n") != std::string::npos);

	r = run({"witt", "2", "4"});
	CHECK(r.code == 0);
	CHECK(r.out.find("l_n(d)") != std::string::npos);
}

TEST_CASE("free algebra dumps")
{
	auto r = run({"free", "2", "3"});
	CHECK(r.code == 0);
	CHECK(r.out == "dim 5, graded 2+1+2, class 3, generators 2\n");

	r = run({"free", "2", "1"});
	CHECK(r.out == "dim 2, graded 2, class 1, generators 2\n");

	r = run({"free", "2", "2", "--constants"});
	auto pos = r.out.find("dim 3\n");
	REQUIRE(pos != std::string::npos);
	auto parsed = parse_algebra(r.out.substr(pos));
	// Same algebra as heisenberg(1) after flipping the sign of the third basis vector.
	auto h = heisenberg(1);
	CHECK(parsed.structure().size() == h.structure().size());
	CHECK(parsed.bracket(0, 1) == SparseVector{{2, Rational(-1)}});

	r = run({"free", "2", "2", "--constants", "--format=machine"});
	CHECK(r.out.find("graded 2 1\nclass 2\ngenerators 2\nconstants\ndim 3\n") != std::string::npos);
	CHECK(r.out.substr(r.out.size() - 4) == "end\n");
}

TEST_CASE("multiplier command")
{
	auto r = run({"multiplier", "--builtin", "abelian:4"});
	CHECK(r.code == 0);
	CHECK(r.out == "dim M(L) = 6\n");

	r = run({"multiplier", "--builtin", "free:2,2", "--format=machine"});
	CHECK(machine_fields(r.out)["multiplier"] == "2");

	TempFile heis("dim 3\nbracket 1 2 -> 1*3\n");
	r = run({"multiplier", heis.path.string(), "--format=machine", "--verbose"});
	CHECK(r.code == 0);
	auto f = machine_fields(r.out);
	CHECK(f["multiplier"] == "2");
	CHECK(f["nullity_d2"] == "2");
	CHECK(f["rank_d3"] == "0");
	CHECK(f["dim_derived"] == "1");
	CHECK(f["class"] == "2");
	CHECK(f["generators"] == "2");

	r = run({"multiplier", "--builtin", "heisenberg:1", "--verbose"});
	CHECK(r.out.find("rank(d3)       0") != std::string::npos);
}

TEST_CASE("report on free:2,2, free:2,3 and abelian:3")
{
	auto r = run({"report", "--builtin", "free:2,2", "--format=machine"});
	CHECK(r.code == 0);
	CHECK(r.out == "format schur-machine 1\n"
	               "command report --builtin free:2,2 --format=machine\n"
	               "algebra_name free:2,2\n"
	               "dim 3\n"
	               "class_c 2\n"
	               "generators_n 2\n"
	               "dim_derived 1\n"
	               "multiplier_dim 2\n"
	               "bound_new 3\n"
	               "bound_hardy 2\n"
	               "bound_moneyhun 3\n"
	               "winner hardy\n"
	               "nontrivial_ok true\n");

	auto f = machine_fields(run({"report", "--builtin", "free:2,3", "--format=machine"}).out);
	CHECK(f["multiplier_dim"] == "3");
	CHECK(f["bound_new"] == "6");
	CHECK(f["bound_hardy"] == "7");
	CHECK(f["winner"] == "new");

	f = machine_fields(run({"report", "--builtin", "abelian:3", "--format=machine"}).out);
	CHECK(f["winner"] == "tie");
	CHECK(f["multiplier_dim"] == "3");
	CHECK(f["bound_new"] == "3");
	CHECK(f["bound_hardy"] == "3");
	CHECK(f["bound_moneyhun"] == "3");

	r = run({"report", "--builtin", "filiform:5"});
	CHECK(r.code == 0);
	CHECK(r.out.find("sharper bound") != std::string::npos);
}

TEST_CASE("machine output equals library values")
{
	for (const auto &entry : standard_catalog()) {
		std::string spec = to_string(entry.spec);
		auto f = machine_fields(run({"report", "--builtin", spec, "--format=machine"}).out);
		auto rep = compare(builtin(entry.spec), spec);
		CHECK(f["dim"] == std::to_string(rep.dim));
		CHECK(f["multiplier_dim"] == std::to_string(rep.multiplier_dim));
		CHECK(f["bound_new"] == rep.bound_new.get_str());
		CHECK(f["bound_hardy"] == std::to_string(rep.bound_hardy));
		CHECK(f["winner"] == to_string(rep.winner));
	}
}

TEST_CASE("verify passes on the stated scopes")
{
	auto r = run({"verify", "--max-n", "2", "--max-class", "4"});
	CHECK(r.code == 0);
	CHECK(r.out.find("all 10 checks passed") != std::string::npos);

	r = run({"verify", "--max-n", "3", "--max-class", "3", "--format=machine"});
	CHECK(r.code == 0);
	CHECK(r.out.find("result pass\n") != std::string::npos);
	CHECK(r.out.find("check oracle-equivalence pass") != std::string::npos);
}

TEST_CASE("verify fails and names the check when a constant is corrupted")
{
	cli::Hooks hooks;
	hooks.tamper = [](const std::string &name, LieAlgebra &L) {
		// Drop the bracket [x1, [x2,x1]]; Jacobi still holds, but the algebra
		// is no longer free nilpotent.
		if (name == "free:2,3")
			L.set_bracket(0, 2, {});
	};
	auto r = run({"verify", "--max-n", "2", "--max-class", "3"}, hooks);
	CHECK(r.code == 1);
	CHECK(r.out.find("FAIL oracle-equivalence") != std::string::npos);
	CHECK(r.out.find("violated by free:2,3") != std::string::npos);

	hooks.tamper = [](const std::string &name, LieAlgebra &L) {
		if (name == "heisenberg:1")
			L.set_bracket(0, 2, basis_vector(0));
	};
	r = run({"verify", "--max-n", "2", "--max-class", "2"}, hooks);
	CHECK(r.code == 1);
	CHECK(r.out.find("FAIL jacobi") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2")
{
	CHECK(run({}).code == 2);
	CHECK(run({"witt"}).code == 2);
	CHECK(run({"witt", "0", "3"}).code == 2);
	CHECK(run({"witt", "2", "x"}).code == 2);
	CHECK(run({"free", "2", "0"}).code == 2);
	CHECK(run({"bogus"}).code == 2);
	CHECK(run({"witt", "2", "3", "--format=xml"}).code == 2);
	CHECK(run({"multiplier"}).code == 2);
	CHECK(run({"multiplier", "--builtin", "unknown:3"}).code == 2);
	CHECK(run({"multiplier", "--builtin", "abelian:-1"}).code == 2);
	CHECK(run({"multiplier", "/nonexistent/file.txt"}).code == 2);

	TempFile bad("dim 3\nbracket 1 2 -> 1*3\nbracket 2 1 -> 1*3\n");
	auto r = run({"multiplier", bad.path.string()});
	CHECK(r.code == 2);
	CHECK(r.err.find(":3:9: bracket orientation") != std::string::npos);

	TempFile jac("dim 3\nbracket 1 2 -> 1*3\nbracket 1 3 -> 1*1\n");
	r = run({"report", jac.path.string()});
	CHECK(r.code == 2);
	CHECK(r.err.find("(1, 2, 3)") != std::string::npos);

	CHECK(run({"multiplier", bad.path.string(), "--builtin", "abelian:2"}).code == 2);
}

TEST_CASE("report on a non-nilpotent algebra exits with 1")
{
	TempFile affine("dim 3\nbracket 1 2 -> 1*2\n");
	auto r = run({"report", affine.path.string()});
	CHECK(r.code == 1);
	CHECK(r.err.find("not nilpotent") != std::string::npos);
	// The multiplier itself is still defined.
	r = run({"multiplier", affine.path.string(), "--verbose"});
	CHECK(r.code == 0);
	CHECK(r.out.find("not nilpotent") != std::string::npos);
}

TEST_CASE("large computations need --force")
{
	auto r = run({"multiplier", "--builtin", "abelian:90"});
	CHECK(r.code == 2);
	CHECK(r.err.find("--force") != std::string::npos);
	r = run({"multiplier", "--builtin", "abelian:90", "--force"});
	CHECK(r.code == 0);
	CHECK(r.out == "dim M(L) = 4005\n");
}

TEST_CASE("help exits cleanly")
{
	auto r = run({"--help"});
	CHECK(r.code == 0);
	CHECK(r.out.find("verify") != std::string::npos);
}
