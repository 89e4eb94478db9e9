#include "schur/witt.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schur {

int moebius(std::uint64_t m)
{
	if (m == 0)
		throw std::invalid_argument("moebius: argument must be positive");
	int result = 1;
	for (std::uint64_t p = 2; p * p <= m; ++p) {
		if (m % p)
			continue;
		m /= p;
		if (m % p == 0)
			return 0;
		result = -result;
	}
	if (m > 1)
		result = -result;
	return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t d)
{
	std::vector<std::uint64_t> small, large;
	for (std::uint64_t k = 1; k * k <= d; ++k) {
		if (d % k)
			continue;
		small.push_back(k);
		if (k != d / k)
			large.push_back(d / k);
	}
	small.insert(small.end(), large.rbegin(), large.rend());
	return small;
}

namespace {

BigInt power(std::uint64_t base, std::uint64_t exp)
{
	BigInt out;
	mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
	return out;
}

} // namespace

BigInt witt_dimension(std::uint64_t n, std::uint64_t d)
{
	if (n == 0 || d == 0)
		throw std::invalid_argument("witt_dimension: n and d must be positive");
	BigInt sum = 0;
	for (std::uint64_t m : divisors(d)) {
		int mu = moebius(m);
		if (mu > 0)
			sum += power(n, d / m);
		else if (mu < 0)
			sum -= power(n, d / m);
	}
	BigInt quotient, remainder;
	mpz_fdiv_qr_ui(quotient.get_mpz_t(), remainder.get_mpz_t(), sum.get_mpz_t(), d);
	if (remainder != 0 || quotient < 0)
		throw std::logic_error("witt_dimension(" + std::to_string(n) + ", " + std::to_string(d) +
		                       "): Moebius sum not a nonnegative multiple of d");
	return quotient;
}

BigInt bound_class_generators(std::uint64_t n, std::uint64_t c)
{
	if (n == 0 || c == 0)
		throw std::invalid_argument("bound_class_generators: n and c must be positive");
	BigInt total = 0;
	for (std::uint64_t j = 1; j <= c; ++j)
		total += witt_dimension(n, j + 1);
	return total;
}

bool WittTable::satisfies_necklace_identity() const
{
	for (std::uint64_t d = 1; d <= max_degree(); ++d) {
		BigInt sum = 0;
		for (std::uint64_t m : divisors(d))
			sum += BigInt(static_cast<unsigned long>(m)) * at(m);
		if (sum != power(n, d))
			return false;
	}
	return true;
}

WittTable witt_table(std::uint64_t n, std::uint64_t max_degree)
{
	WittTable table{n, {}};
	table.values.reserve(max_degree);
	for (std::uint64_t d = 1; d <= max_degree; ++d)
		table.values.push_back(witt_dimension(n, d));
	return table;
}

} // namespace schur
