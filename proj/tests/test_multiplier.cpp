#include "schur/catalog.hpp"
#include "schur/free_lie.hpp"
#include "schur/multiplier.hpp"
#include "schur/witt.hpp"

#include "random_algebra.hpp"

#include <doctest.h>

using namespace schur;

TEST_CASE("exterior basis positions are lexicographic")
{
	for (std::size_t n = 0; n <= 7; ++n) {
		auto pairs = exterior_basis(n, 2);
		CHECK(pairs.size() == binomial(n, 2));
		for (const auto &p : pairs)
			CHECK(pair_position(p.indices[0], p.indices[1], n) == p.position);
		auto triples = exterior_basis(n, 3);
		CHECK(triples.size() == binomial(n, 3));
		for (const auto &t : triples)
			CHECK(triple_position(t.indices[0], t.indices[1], t.indices[2], n) == t.position);
	}
	CHECK_THROWS_AS(exterior_basis(4, 4), std::invalid_argument);
}

TEST_CASE("ce_boundary_2 examples")
{
	CHECK(ce_boundary_2(abelian(4)).is_zero());
	CHECK(ce_boundary_2(abelian(4)).cols() == 6);

	auto d2 = ce_boundary_2(heisenberg(1));
	CHECK(d2.rows() == 3);
	CHECK(d2.cols() == 3);
	CHECK(d2.nnz() == 1);
	CHECK(d2.get(2, pair_position(0, 1, 3)) == Rational(1));
}

TEST_CASE("ce_boundary_3 examples")
{
	CHECK(ce_boundary_3(abelian(5)).is_zero());
	auto h = ce_boundary_3(heisenberg(1));
	CHECK(h.rows() == 3);
	CHECK(h.cols() == 1);
	CHECK(h.is_zero());

	// free(2,3): basis x1, x2, y=[x2,x1], z1=[y,x1], z2=[y,x2].
	// Column (x1,x2,y): [x1,x2]^y - [x1,y]^x2 + [x2,y]^x1 = -y^y + z1^x2 - z2^x1
	//                 = -x2^z1 + x1^z2.
	auto d3 = ce_boundary_3(free_nilpotent(2, 3));
	std::size_t col = triple_position(0, 1, 2, 5);
	SparseVector column;
	for (std::size_t r = 0; r < d3.rows(); ++r)
		if (auto v = d3.get(r, col); !v.is_zero())
			column.emplace(r, v);
	CHECK(column == SparseVector{{pair_position(1, 3, 5), Rational(-1)},
	                             {pair_position(0, 4, 5), Rational(1)}});
}

TEST_CASE("rank of the degree-2 boundary is dim L^2")
{
	for (const auto &entry : standard_catalog()) {
		auto L = builtin(entry.spec);
		auto whole = Subspace::whole(L.dim());
		CHECK(rank(ce_boundary_2(L)) == product_space(L, whole, whole).dim());
	}
}

TEST_CASE("boundary maps compose to zero")
{
	for (const auto &entry : standard_catalog()) {
		auto L = builtin(entry.spec);
		CHECK(multiply(ce_boundary_2(L), ce_boundary_3(L)).is_zero());
	}
	std::mt19937 rng(31337);
	for (int trial = 0; trial < 40; ++trial) {
		auto L = testing::random_valid_algebra(rng);
		REQUIRE(validate(L).ok);
		CHECK(multiply(ce_boundary_2(L), ce_boundary_3(L)).is_zero());
	}
	// A Jacobi failure shows up as a nonzero composite.
	LieAlgebra bad = heisenberg(1);
	bad.set_bracket(0, 2, basis_vector(0));
	CHECK_FALSE(multiply(ce_boundary_2(bad), ce_boundary_3(bad)).is_zero());
}

TEST_CASE("multiplier_dimension examples")
{
	for (std::size_t n = 1; n <= 6; ++n)
		CHECK(multiplier_dimension(abelian(n)) == n * (n - 1) / 2);
	CHECK(multiplier_dimension(abelian(1)) == 0);
	CHECK(multiplier_dimension(LieAlgebra(0)) == 0);
	CHECK(multiplier_dimension(heisenberg(1)) == 2);
	CHECK(multiplier_dimension(free_nilpotent(2, 2)) == 2);
	CHECK(multiplier_dimension(free_nilpotent(2, 3)) == 3);

	auto b = multiplier_breakdown(heisenberg(1));
	CHECK(b.cycles == 2);
	CHECK(b.boundaries == 0);
}

TEST_CASE("multiplier of non-nilpotent algebras is still computed")
{
	CHECK(multiplier_dimension(testing::sl2()) == 0);
	LieAlgebra affine(2);
	affine.set_bracket(0, 1, basis_vector(1));
	CHECK(multiplier_dimension(affine) == 0);
}

TEST_CASE("multiplier is invariant under change of basis")
{
	std::mt19937 rng(4242);
	for (const auto &base : testing::random_bases()) {
		std::size_t m = multiplier_dimension(base);
		for (int trial = 0; trial < 3; ++trial) {
			auto L = testing::random_basis_change(base, rng);
			REQUIRE(validate(L).ok);
			CHECK(multiplier_dimension(L) == m);
		}
	}
}

TEST_CASE("multiplier_of_free_nilpotent")
{
	CHECK(multiplier_of_free_nilpotent(2, 1) == 1);
	CHECK(multiplier_of_free_nilpotent(2, 2) == 2);
	CHECK(multiplier_of_free_nilpotent(2, 3) == 3);
	CHECK_THROWS_AS(multiplier_of_free_nilpotent(1, 2), std::invalid_argument);
	CHECK_THROWS_AS(multiplier_of_free_nilpotent(2, 0), std::invalid_argument);
}

TEST_CASE("homology matches the free presentation closed form")
{
	for (auto [n, cmax] : {std::pair{2u, 6u}, {3u, 4u}, {4u, 3u}})
		for (std::size_t c = 1; c <= cmax; ++c) {
			auto L = free_nilpotent(n, c);
			CHECK_MESSAGE(multiplier_of_free_nilpotent(n, c) ==
			                  static_cast<unsigned long>(multiplier_dimension(L)),
			              "n=" << n << " c=" << c);
		}
}
