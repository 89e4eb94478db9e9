#include "schur/catalog.hpp"
#include "schur/free_lie.hpp"
#include "schur/multiplier.hpp"

#include "random_algebra.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace schur;

namespace {

std::string read_file(const std::string &path)
{
	std::ifstream in(path);
	REQUIRE(in);
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

ParseError parse_error(const std::string &text)
{
	try {
		parse_algebra(text);
	} catch (const ParseError &e) {
		return e;
	}
	FAIL("expected a parse error for:\n" << text);
	throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("builtin families")
{
	auto h = builtin("heisenberg", {1});
	CHECK(h.dim() == 3);
	// Matches free_nilpotent(2,2) up to labels and the sign of the derived
	// generator: [x1,x2] = -[x2,x1].
	auto f = free_nilpotent(2, 2);
	CHECK(f.structure().size() == 1);
	CHECK(h.structure().size() == 1);
	CHECK(h.bracket(0, 1) == SparseVector{{2, Rational(1)}});
	CHECK(f.bracket(0, 1) == SparseVector{{2, Rational(-1)}});

	auto a = builtin("abelian", {4});
	CHECK(a.dim() == 4);
	CHECK(nilpotency_class(a) == 1);

	auto fil = builtin("filiform", {5});
	CHECK(fil.dim() == 5);
	CHECK(nilpotency_class(fil) == 4);
	CHECK(min_generators(fil) == 2);

	CHECK(builtin("free_nilpotent", {2, 3}) == builtin("free", {2, 3}));
	CHECK(heisenberg(3).bracket(4, 5) == SparseVector{{6, Rational(1)}});

	CHECK_THROWS_AS(builtin("abelian", {-1}), std::invalid_argument);
	CHECK_THROWS_AS(builtin("abelian", {2, 3}), std::invalid_argument);
	CHECK_THROWS_AS(builtin("free", {2}), std::invalid_argument);
	CHECK_THROWS_AS(builtin("filiform", {2}), std::invalid_argument);
	CHECK_THROWS_AS(builtin("nonsense", {1}), std::invalid_argument);
}

TEST_CASE("builtin spec grammar")
{
	auto s = parse_builtin_spec("free:2,3");
	CHECK(s.family == "free");
	CHECK(s.params == std::vector<long>{2, 3});
	CHECK(to_string(s) == "free:2,3");
	CHECK(parse_builtin_spec("abelian:4").params == std::vector<long>{4});
	CHECK_THROWS_AS(parse_builtin_spec("abelian"), std::invalid_argument);
	CHECK_THROWS_AS(parse_builtin_spec("free:2,x"), std::invalid_argument);
	CHECK_THROWS_AS(parse_builtin_spec(":3"), std::invalid_argument);
}

TEST_CASE("every builtin passes validate and matches the golden table")
{
	auto golden = parse_golden_table(read_file(SCHUR_TEST_DATA "/catalog_golden.txt"));
	auto catalog = standard_catalog();
	REQUIRE(golden.size() == catalog.size());
	for (std::size_t i = 0; i < golden.size(); ++i) {
		const auto &g = golden[i];
		CAPTURE(to_string(g.spec));
		CHECK(to_string(g.spec) == to_string(catalog[i].spec));
		REQUIRE(g.expected);
		CHECK_FALSE(g.expected->source.empty());
		auto L = builtin(g.spec);
		CHECK(validate(L).ok);
		CHECK(L.dim() == g.expected->dim);
		CHECK(nilpotency_class(L) == g.expected->nilpotency_class);
		CHECK(min_generators(L) == g.expected->generators);
		CHECK(multiplier_dimension(L) == g.expected->multiplier);
	}
}

TEST_CASE("heisenberg multipliers")
{
	CHECK(multiplier_dimension(heisenberg(1)) == 2);
	// Higher k follow 2k^2 - k - 1.
	for (std::size_t k = 2; k <= 4; ++k)
		CHECK(multiplier_dimension(heisenberg(k)) == 2 * k * k - k - 1);
}

TEST_CASE("parse the Heisenberg file")
{
	auto L = parse_algebra("dim 3\nbracket 1 2 -> 1*3\n");
	CHECK(L == heisenberg(1));
	CHECK(validate(L).ok);

	auto commented = parse_algebra("# Heisenberg\n\ndim 3   # three\r\nlabels x y z\nbracket 1 2 -> 1*3 # only bracket\n");
	CHECK(commented.labels() == std::vector<std::string>{"x", "y", "z"});
	CHECK(commented.structure() == heisenberg(1).structure());
}

TEST_CASE("coefficients, signs and combined terms")
{
	auto L = parse_algebra("dim 4\nbracket 1 2 -> 1/2*3 - 3*4\nbracket 1 3 -> -2/4*4 + 1*4 + -1/2*4\n");
	CHECK(L.bracket(0, 1) == SparseVector{{2, Rational(BigInt(1), BigInt(2))}, {3, Rational(-3)}});
	CHECK(L.bracket(0, 2).empty());
	CHECK(serialize(L) == "dim 4\nbracket 1 2 -> 1/2*3 - 3*4\n");
}

TEST_CASE("orientation and duplicate errors")
{
	auto e = parse_error("dim 3\nbracket 1 2 -> 1*3\nbracket 2 1 -> 1*3\n");
	CHECK(e.kind == ParseError::Kind::orientation);
	CHECK(e.line == 3);
	CHECK(e.column == 9);

	e = parse_error("dim 3\nbracket 1 2 -> 1*3\nbracket 1 2 -> 1*3\n");
	CHECK(e.kind == ParseError::Kind::duplicate_bracket);
	CHECK(e.line == 3);

	CHECK(parse_error("dim 3\nbracket 2 2 -> 1*3\n").kind == ParseError::Kind::orientation);
}

TEST_CASE("index range errors")
{
	auto e = parse_error("dim 3\nbracket 1 4 -> 1*3\n");
	CHECK(e.kind == ParseError::Kind::index_out_of_range);
	CHECK(e.column == 11);
	e = parse_error("dim 3\nbracket 1 2 -> 1*3 + 2*7\n");
	CHECK(e.kind == ParseError::Kind::index_out_of_range);
	CHECK(e.column == 24);
	CHECK(parse_error("dim 3\nbracket 0 2 -> 1*3\n").kind == ParseError::Kind::index_out_of_range);
}

TEST_CASE("syntax errors carry line and column")
{
	auto e = parse_error("bracket 1 2 -> 1*3\n");
	CHECK(e.kind == ParseError::Kind::syntax);
	CHECK(e.line == 1);
	CHECK(e.column == 1);

	e = parse_error("dim 3\nbracket 1 2 1*3\n");
	CHECK(e.kind == ParseError::Kind::syntax);
	CHECK(e.line == 2);
	CHECK(e.column == 13);

	e = parse_error("dim 3\nbracket 1 2 -> 1 3\n");
	CHECK(e.column == 18);
	CHECK(parse_error("dim 3\nbracket 1 2 ->\n").kind == ParseError::Kind::syntax);
	CHECK(parse_error("dim 3\nbracket 1 2 -> 1/0*3\n").kind == ParseError::Kind::syntax);
	CHECK(parse_error("dim 3\nbracket 1 2 -> 1/*3\n").kind == ParseError::Kind::syntax);
	CHECK(parse_error("dim 3\nbrackets 1 2 -> 1*3\n").kind == ParseError::Kind::syntax);
	CHECK(parse_error("dim 3 4\n").kind == ParseError::Kind::syntax);
	CHECK(parse_error("").kind == ParseError::Kind::syntax);
	CHECK(parse_error("# nothing\n").kind == ParseError::Kind::syntax);
}

TEST_CASE("label errors")
{
	CHECK(parse_error("dim 3\nlabels a b\n").kind == ParseError::Kind::labels);
	CHECK(parse_error("dim 2\nlabels a b\nlabels c d\n").kind == ParseError::Kind::labels);
	CHECK(parse_error("dim 3\nbracket 1 2 -> 1*3\nlabels a b c\n").kind == ParseError::Kind::labels);
}

TEST_CASE("Jacobi failures name the triple")
{
	auto e = parse_error("dim 3\nbracket 1 2 -> 1*3\nbracket 1 3 -> 1*1\n");
	CHECK(e.kind == ParseError::Kind::jacobi);
	CHECK(std::string(e.what()).find("(1, 2, 3)") != std::string::npos);
}

TEST_CASE("serialize examples")
{
	CHECK(serialize(abelian(2)) == "dim 2\n");
	CHECK(serialize(heisenberg(1)) == "dim 3\nbracket 1 2 -> 1*3\n");
	CHECK(serialize(free_nilpotent(2, 2)) == "dim 3\nlabels x1 x2 [x2,x1]\nbracket 1 2 -> -1*3\n");
}

TEST_CASE("parse and serialize are inverse on canonical files")
{
	std::vector<LieAlgebra> algebras;
	for (const auto &entry : standard_catalog())
		algebras.push_back(builtin(entry.spec));
	std::mt19937 rng(5);
	for (int i = 0; i < 20; ++i)
		algebras.push_back(testing::random_valid_algebra(rng));
	for (const auto &L : algebras) {
		std::string text = serialize(L);
		LieAlgebra back = parse_algebra(text);
		CHECK(back == L);
		CHECK(serialize(back) == text);
	}
}
