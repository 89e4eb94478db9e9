#pragma once

#include "schur/lie_algebra.hpp"

#include <cstddef>
#include <vector>

namespace schur {

// A basis wedge e_{i1} ^ ... ^ e_{ik} (k = 2 or 3) of the exterior power of an
// N-dimensional space, with strictly increasing indices. `position` is its
// index in lexicographic order.
struct ExteriorBasisIndex {
	std::size_t arity = 0;
	std::vector<std::size_t> indices;
	std::size_t position = 0;
};

std::size_t binomial(std::size_t n, std::size_t k);

// Lexicographic positions of i < j and i < j < k among wedges of an
// N-dimensional space.
std::size_t pair_position(std::size_t i, std::size_t j, std::size_t n);
std::size_t triple_position(std::size_t i, std::size_t j, std::size_t k, std::size_t n);

// All wedges of the given arity in lexicographic order.
std::vector<ExteriorBasisIndex> exterior_basis(std::size_t n, std::size_t arity);

// Lambda^2 L -> L, e_i ^ e_j -> [e_i, e_j]. Shape N x C(N,2).
SparseMatrix ce_boundary_2(const LieAlgebra &algebra);

// Lambda^3 L -> Lambda^2 L,
//   e_i ^ e_j ^ e_k -> [e_i,e_j] ^ e_k - [e_i,e_k] ^ e_j + [e_j,e_k] ^ e_i.
// Shape C(N,2) x C(N,3).
SparseMatrix ce_boundary_3(const LieAlgebra &algebra);

struct MultiplierBreakdown {
	std::size_t cycles = 0;     // nullity of the degree-2 boundary
	std::size_t boundaries = 0; // rank of the degree-3 boundary
	std::size_t dimension() const { return cycles - boundaries; }
};

MultiplierBreakdown multiplier_breakdown(const LieAlgebra &algebra);

// dim H_2(L; Q) with trivial coefficients, i.e. the Schur multiplier.
std::size_t multiplier_dimension(const LieAlgebra &algebra);

// Closed form for free nilpotent F/F^{c+1}: witt_dimension(n, c + 1).
// Requires n >= 2.
BigInt multiplier_of_free_nilpotent(std::size_t n, std::size_t c);

} // namespace schur
