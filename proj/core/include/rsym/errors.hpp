#pragma once

#include <stdexcept>
#include <string>

namespace rsym {

enum class errc {
	index_out_of_range,
	non_prime_modulus,
	duplicate_basis_name,
	mixed_algebras,
	unbound_variable,
	not_an_ideal,
	left_factor_not_commutative_associative,
	algebra_not_in_variety,
	invalid_n,
	degree_cap_exceeded,
	parse_error,
	not_an_identity,
	g_not_in_t,
	subset_too_large,
	closure_diverged,
	division_by_zero,
};

/// All library errors are reported through this exception type; `code()`
/// distinguishes the contract violation.
class error : public std::runtime_error {
  public:
	error(errc c, std::string msg) : std::runtime_error(std::move(msg)), code_(c) {}
	errc code() const { return code_; }

  private:
	errc code_;
};

[[noreturn]] inline void fail(errc c, std::string const &msg) { throw error(c, msg); }

} // namespace rsym
