#include "rsym/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace rsym {

namespace {

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

// inverse of a mod p by extended Euclid; a is already reduced, a != 0
bigint mod_inverse(bigint const &a, bigint const &p)
{
	bigint r0 = p, r1 = a, s0 = 0, s1 = 1;
	while (r1 != 0)
	{
		bigint q = r0 / r1;
		bigint r2 = r0 - q * r1;
		bigint s2 = s0 - q * s1;
		r0 = r1;
		r1 = r2;
		s0 = s1;
		s1 = s2;
	}
	if (r0 != 1)
		fail(errc::non_prime_modulus, "element not invertible mod p");
	s0 %= p;
	if (s0 < 0)
		s0 += p;
	return s0;
}

} // namespace

Field::Field(std::uint64_t modulus) : p(modulus)
{
	if (!is_prime(modulus))
		fail(errc::non_prime_modulus, "modulus " + std::to_string(modulus) + " is not prime");
}

Field Field::parse(std::string const &s)
{
	if (s == "Q" || s == "q")
		return rationals();
	if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f'))
	{
		std::string num = s.substr(1);
		if (num.size() >= 2 && num[0] == 'p' && num[1] == ':')
			num = num.substr(2);
		try
		{
			return prime(std::stoull(num));
		}
		catch (std::logic_error const &)
		{
			fail(errc::parse_error, "bad field spec: " + s);
		}
	}
	fail(errc::parse_error, "bad field spec: " + s);
}

std::string Field::name() const
{
	return is_rational() ? "Q" : "F" + std::to_string(p);
}

void Scalar::reduce()
{
	if (f_.is_rational())
		return;
	bigint const p = f_.p;
	bigint num = numerator(v_);
	bigint den = denominator(v_);
	if (den != 1)
	{
		den %= p;
		if (den < 0)
			den += p;
		if (den == 0)
			fail(errc::division_by_zero, "denominator vanishes mod p");
		num *= mod_inverse(den, p);
	}
	num %= p;
	if (num < 0)
		num += p;
	v_ = bigrat(num);
}

void Scalar::check_same(Scalar const &o) const
{
	if (!(f_ == o.f_))
		fail(errc::mixed_algebras, "scalars from different fields");
}

Scalar Scalar::operator-() const { return Scalar(f_, -v_); }

Scalar Scalar::operator+(Scalar const &o) const
{
	check_same(o);
	return Scalar(f_, v_ + o.v_);
}

Scalar Scalar::operator-(Scalar const &o) const
{
	check_same(o);
	return Scalar(f_, v_ - o.v_);
}

Scalar Scalar::operator*(Scalar const &o) const
{
	check_same(o);
	return Scalar(f_, v_ * o.v_);
}

Scalar Scalar::inverse() const
{
	if (is_zero())
		fail(errc::division_by_zero, "inverse of zero");
	if (f_.is_rational())
		return Scalar(f_, 1 / v_);
	return Scalar(f_, bigrat(mod_inverse(numerator(v_), bigint(f_.p))));
}

Scalar Scalar::parse(Field f, std::string const &s)
{
	try
	{
		auto slash = s.find('/');
		if (slash == std::string::npos)
			return Scalar(f, bigrat(bigint(s)));
		bigint num(s.substr(0, slash));
		bigint den(s.substr(slash + 1));
		if (den == 0)
			fail(errc::division_by_zero, "zero denominator in " + s);
		return Scalar(f, bigrat(num, den));
	}
	catch (std::runtime_error const &)
	{
		fail(errc::parse_error, "bad scalar: " + s);
	}
}

std::string Scalar::str() const
{
	if (denominator(v_) == 1)
		return numerator(v_).str();
	return numerator(v_).str() + "/" + denominator(v_).str();
}

} // namespace rsym
