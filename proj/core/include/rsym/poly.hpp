#pragma once

#include "rsym/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rsym {

/// Sorted sparse exponent vector (var -> exponent, exponents > 0).
using Monomial = std::vector<std::pair<int, int>>;

inline Monomial mono_mul(Monomial const &a, Monomial const &b)
{
	Monomial r;
	r.reserve(a.size() + b.size());
	auto i = a.begin();
	auto j = b.begin();
	while (i != a.end() && j != b.end())
	{
		if (i->first < j->first)
			r.push_back(*i++);
		else if (j->first < i->first)
			r.push_back(*j++);
		else
		{
			r.emplace_back(i->first, i->second + j->second);
			++i;
			++j;
		}
	}
	r.insert(r.end(), i, a.end());
	r.insert(r.end(), j, b.end());
	return r;
}

/// Sparse multivariate polynomial with exact coefficients. Used for the
/// generic-coefficient substitutions behind identity checking: an identity
/// holds iff every coefficient polynomial is identically zero.
class Poly {
  public:
	Poly() = default;
	explicit Poly(Scalar c)
	{
		if (!c.is_zero())
			terms_[Monomial{}] = c;
	}
	static Poly variable(Field f, int var)
	{
		Poly p;
		p.terms_[Monomial{{var, 1}}] = Scalar::one(f);
		return p;
	}

	bool is_zero() const { return terms_.empty(); }
	std::map<Monomial, Scalar> const &terms() const { return terms_; }

	Poly &add(Monomial const &m, Scalar const &c)
	{
		if (c.is_zero())
			return *this;
		auto [it, fresh] = terms_.emplace(m, c);
		if (!fresh)
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
		return *this;
	}

	Poly operator+(Poly const &o) const
	{
		Poly r = *this;
		for (auto const &[m, c] : o.terms_)
			r.add(m, c);
		return r;
	}
	Poly operator-(Poly const &o) const
	{
		Poly r = *this;
		for (auto const &[m, c] : o.terms_)
			r.add(m, -c);
		return r;
	}
	Poly operator*(Poly const &o) const
	{
		Poly r;
		for (auto const &[m1, c1] : terms_)
			for (auto const &[m2, c2] : o.terms_)
				r.add(mono_mul(m1, m2), c1 * c2);
		return r;
	}
	Poly operator*(Scalar const &s) const
	{
		Poly r;
		for (auto const &[m, c] : terms_)
			r.add(m, c * s);
		return r;
	}
	Poly operator-() const
	{
		Poly r;
		for (auto const &[m, c] : terms_)
			r.add(m, -c);
		return r;
	}
	Poly &operator+=(Poly const &o)
	{
		for (auto const &[m, c] : o.terms_)
			add(m, c);
		return *this;
	}
	bool operator==(Poly const &o) const { return terms_ == o.terms_; }

	/// Substitute concrete scalars for variables; absent variables read 0.
	Scalar evaluate(Field f, std::map<int, Scalar> const &assign) const
	{
		Scalar r = Scalar::zero(f);
		for (auto const &[m, c] : terms_)
		{
			Scalar t = c;
			bool dead = false;
			for (auto const &[v, e] : m)
			{
				auto it = assign.find(v);
				if (it == assign.end() || it->second.is_zero())
				{
					dead = true;
					break;
				}
				for (int i = 0; i < e; ++i)
					t *= it->second;
			}
			if (!dead)
				r += t;
		}
		return r;
	}

  private:
	std::map<Monomial, Scalar> terms_;
};

inline Poly operator*(Scalar const &s, Poly const &p) { return p * s; }

} // namespace rsym
