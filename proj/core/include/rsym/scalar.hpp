#pragma once

#include "rsym/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace rsym {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

/// Ground field: the rationals (p == 0) or the prime field GF(p).
struct Field {
	std::uint64_t p = 0;

	Field() = default;
	explicit Field(std::uint64_t modulus);

	bool is_rational() const { return p == 0; }
	bool operator==(Field const &) const = default;

	static Field rationals() { return Field{}; }
	static Field prime(std::uint64_t p) { return Field(p); }

	/// Parses "Q", "F2", "F3" or "Fp:<p>".
	static Field parse(std::string const &s);
	std::string name() const;
};

/// Exact field element. Over GF(p) the value is kept reduced to [0, p).
class Scalar {
  public:
	Scalar() = default;
	Scalar(Field f, long v) : f_(f), v_(v) { reduce(); }
	Scalar(Field f, bigrat v) : f_(f), v_(std::move(v)) { reduce(); }

	static Scalar zero(Field f) { return Scalar(f, 0); }
	static Scalar one(Field f) { return Scalar(f, 1); }
	/// Parses "3", "-1", "3/2" in the given field.
	static Scalar parse(Field f, std::string const &s);

	Field field() const { return f_; }
	bool is_zero() const { return v_ == 0; }
	bigrat const &value() const { return v_; }

	Scalar operator-() const;
	Scalar operator+(Scalar const &o) const;
	Scalar operator-(Scalar const &o) const;
	Scalar operator*(Scalar const &o) const;
	Scalar operator/(Scalar const &o) const { return *this * o.inverse(); }
	Scalar &operator+=(Scalar const &o) { return *this = *this + o; }
	Scalar &operator-=(Scalar const &o) { return *this = *this - o; }
	Scalar &operator*=(Scalar const &o) { return *this = *this * o; }
	Scalar inverse() const;

	bool operator==(Scalar const &o) const { return v_ == o.v_; }
	bool operator<(Scalar const &o) const { return v_ < o.v_; }

	std::string str() const;

  private:
	void reduce();
	void check_same(Scalar const &o) const;

	Field f_;
	bigrat v_ = 0;
};

} // namespace rsym
