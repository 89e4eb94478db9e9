#include "schur/multiplier.hpp"

#include "schur/witt.hpp"

#include <stdexcept>

namespace schur {

std::size_t binomial(std::size_t n, std::size_t k)
{
	if (k > n)
		return 0;
	std::size_t out = 1;
	for (std::size_t i = 1; i <= k; ++i)
		out = out * (n - k + i) / i;
	return out;
}

std::size_t pair_position(std::size_t i, std::size_t j, std::size_t n)
{
	// pairs starting below i, then offset within row i
	return binomial(n, 2) - binomial(n - i, 2) + (j - i - 1);
}

std::size_t triple_position(std::size_t i, std::size_t j, std::size_t k, std::size_t n)
{
	return binomial(n, 3) - binomial(n - i, 3) + pair_position(j - i - 1, k - i - 1, n - i - 1);
}

std::vector<ExteriorBasisIndex> exterior_basis(std::size_t n, std::size_t arity)
{
	std::vector<ExteriorBasisIndex> out;
	if (arity == 2) {
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i + 1; j < n; ++j)
				out.push_back({2, {i, j}, out.size()});
	} else if (arity == 3) {
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i + 1; j < n; ++j)
				for (std::size_t k = j + 1; k < n; ++k)
					out.push_back({3, {i, j, k}, out.size()});
	} else {
		throw std::invalid_argument("exterior_basis: arity must be 2 or 3");
	}
	return out;
}

SparseMatrix ce_boundary_2(const LieAlgebra &algebra)
{
	const std::size_t n = algebra.dim();
	SparseMatrix m(n, binomial(n, 2));
	for (const auto &[ij, value] : algebra.structure()) {
		std::size_t col = pair_position(ij.first, ij.second, n);
		for (const auto &[k, c] : value)
			m.set(k, col, c);
	}
	return m;
}

namespace {

// Adds scale * [x] ^ e_m to column `col`, reordering wedges to increasing
// index order.
void add_wedge(SparseMatrix &m, std::size_t col, const Rational &scale, const SparseVector &x,
               std::size_t e, std::size_t n)
{
	for (const auto &[l, c] : x) {
		if (l == e)
			continue;
		if (l < e)
			m.add(pair_position(l, e, n), col, scale * c);
		else
			m.add(pair_position(e, l, n), col, -(scale * c));
	}
}

} // namespace

SparseMatrix ce_boundary_3(const LieAlgebra &algebra)
{
	const std::size_t n = algebra.dim();
	SparseMatrix m(binomial(n, 2), binomial(n, 3));
	std::size_t col = 0;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) {
			SparseVector ij = algebra.bracket(i, j);
			for (std::size_t k = j + 1; k < n; ++k, ++col) {
				add_wedge(m, col, Rational(1), ij, k, n);
				add_wedge(m, col, Rational(-1), algebra.bracket(i, k), j, n);
				add_wedge(m, col, Rational(1), algebra.bracket(j, k), i, n);
			}
		}
	return m;
}

MultiplierBreakdown multiplier_breakdown(const LieAlgebra &algebra)
{
	return {nullity(ce_boundary_2(algebra)), rank(ce_boundary_3(algebra))};
}

std::size_t multiplier_dimension(const LieAlgebra &algebra)
{
	return multiplier_breakdown(algebra).dimension();
}

BigInt multiplier_of_free_nilpotent(std::size_t n, std::size_t c)
{
	if (n < 2)
		throw std::invalid_argument("multiplier_of_free_nilpotent: needs at least 2 generators");
	if (c < 1)
		throw std::invalid_argument("multiplier_of_free_nilpotent: class must be positive");
	return witt_dimension(n, c + 1);
}

} // namespace schur
