#pragma once

#include "schur/rational.hpp"

#include <cstdint>
#include <vector>

namespace schur {

// Moebius function. Throws std::invalid_argument for m == 0.
int moebius(std::uint64_t m);

// Positive divisors of d in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t d);

// Dimension of the degree-d homogeneous component of the free Lie algebra on
// n generators: (1/d) * sum_{m | d} mu(m) n^(d/m).
BigInt witt_dimension(std::uint64_t n, std::uint64_t d);

// sum_{j=1}^{c} witt_dimension(n, j + 1): the multiplier bound in terms of
// generator count n and nilpotency class c.
BigInt bound_class_generators(std::uint64_t n, std::uint64_t c);

struct WittTable {
	std::uint64_t n = 0;
	std::vector<BigInt> values; // values[d - 1] = witt_dimension(n, d)

	std::uint64_t max_degree() const { return values.size(); }
	const BigInt &at(std::uint64_t d) const { return values.at(d - 1); }
	// sum_{m | d} m * at(m) == n^d for every tabulated d.
	bool satisfies_necklace_identity() const;
};

WittTable witt_table(std::uint64_t n, std::uint64_t max_degree);

} // namespace schur
