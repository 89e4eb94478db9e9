#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace schur {

using BigInt = mpz_class;

// Exact fraction over arbitrary-precision integers. Always stored reduced with
// a positive denominator.
class Rational {
public:
	Rational() = default;
	Rational(long value) : q_(value) {}
	explicit Rational(const BigInt &value) : q_(value) {}
	Rational(const BigInt &numerator, const BigInt &denominator);

	// Accepts "p" or "p/q" with an optional leading sign; throws
	// std::invalid_argument on malformed text or a zero denominator.
	static Rational parse(std::string_view text);

	BigInt numerator() const { return q_.get_num(); }
	BigInt denominator() const { return q_.get_den(); }

	bool is_zero() const { return sgn(q_) == 0; }
	bool is_integer() const { return q_.get_den() == 1; }
	int sign() const { return sgn(q_); }

	// "p" for integers, "p/q" otherwise.
	std::string to_string() const;

	Rational operator-() const { return Rational(mpq_class(-q_)); }
	Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
	Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
	Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
	// Throws std::domain_error on division by zero.
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		int c = cmp(a.q_, b.q_);
		return c < 0 ? std::strong_ordering::less
		       : c > 0 ? std::strong_ordering::greater
		               : std::strong_ordering::equal;
	}

	const mpq_class &raw() const { return q_; }

private:
	explicit Rational(mpq_class q) : q_(std::move(q)) {}
	mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace schur
