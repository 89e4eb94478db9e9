#include "schur/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace schur {

namespace {

bool is_integer_literal(std::string_view s)
{
	if (!s.empty() && (s.front() == '-' || s.front() == '+'))
		s.remove_prefix(1);
	if (s.empty())
		return false;
	for (char ch : s)
		if (ch < '0' || ch > '9')
			return false;
	return true;
}

BigInt parse_integer(std::string_view s)
{
	if (!s.empty() && s.front() == '+')
		s.remove_prefix(1);
	return BigInt(std::string(s), 10);
}

} // namespace

Rational::Rational(const BigInt &numerator, const BigInt &denominator)
{
	if (denominator == 0)
		throw std::domain_error("rational with zero denominator");
	q_ = mpq_class(numerator, denominator);
	q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	if (!is_integer_literal(num))
		throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
	if (slash == std::string_view::npos)
		return Rational(parse_integer(num));
	std::string_view den = text.substr(slash + 1);
	if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
		throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
	BigInt d = parse_integer(den);
	if (d == 0)
		throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
	return Rational(parse_integer(num), d);
}

std::string Rational::to_string() const
{
	if (is_integer())
		return q_.get_num().get_str();
	return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw std::domain_error("division by zero rational");
	q_ /= o.q_;
	return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
	return os << r.to_string();
}

} // namespace schur
