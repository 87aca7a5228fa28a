#pragma once

#include "rsym/errors.hpp"
#include "rsym/poly.hpp"
#include "rsym/scalar.hpp"
#include "rsym/term.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rsym {

/// Sparse coefficient vector over a basis, generic in the coefficient ring.
template <class K> using Vec = std::map<int, K>;

template <class K> void vec_add(Vec<K> &dst, int idx, K const &c)
{
	if (c.is_zero())
		return;
	auto [it, fresh] = dst.emplace(idx, c);
	if (!fresh)
	{
		it->second += c;
		if (it->second.is_zero())
			dst.erase(it);
	}
}

class Algebra;
class Element;
class LinOp;
class Subspace;

/// Finite-dimensional algebra over an exact field, given by sparse
/// structure constants e_i e_j = sum_k c_ijk e_k on a named basis.
class Algebra {
  public:
	struct Product {
		int left, right;
		std::vector<std::pair<int, Scalar>> result; // no explicit zeros
	};

	Algebra() = default;
	Algebra(Field field, std::vector<std::string> basis_names,
	        std::vector<Product> products);

	std::size_t dim() const { return d_->names.size(); }
	Field field() const { return d_->field; }
	std::vector<std::string> const &basis_names() const { return d_->names; }
	int index_of(std::string const &name) const;

	std::vector<std::pair<int, Scalar>> const *sc(int i, int j) const
	{
		auto it = d_->sc.find({i, j});
		return it == d_->sc.end() ? nullptr : &it->second;
	}
	std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> const &
	sc_table() const
	{
		return d_->sc;
	}

	bool same(Algebra const &o) const { return d_ == o.d_; }

	Element basis_element(int i) const;
	Element basis_element(std::string const &name) const;
	Element zero() const;

	/// Bilinear product of coefficient vectors, generic coefficients.
	template <class K> Vec<K> mul_vec(Vec<K> const &u, Vec<K> const &v) const
	{
		Vec<K> r;
		for (auto const &[i, ci] : u)
			for (auto const &[j, cj] : v)
			{
				auto const *prods = sc(i, j);
				if (!prods)
					continue;
				K c = ci * cj;
				if (c.is_zero())
					continue;
				for (auto const &[k, s] : *prods)
					vec_add(r, k, c * s);
			}
		return r;
	}

	/// Cached variety-membership answer (identities (2), (3), (4)).
	bool in_variety_r() const;

  private:
	struct Data {
		Field field;
		std::vector<std::string> names;
		std::map<std::string, int> name_index;
		std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> sc;
		mutable std::optional<bool> variety_cache;
	};
	std::shared_ptr<const Data> d_;
	friend class Element;
};

/// Element of an Algebra: sparse coefficients, no stored zeros.
class Element {
  public:
	Element() = default;
	Element(Algebra alg, Vec<Scalar> coeffs)
	    : alg_(std::move(alg)), c_(std::move(coeffs))
	{
	}

	Algebra const &algebra() const { return alg_; }
	Vec<Scalar> const &coeffs() const { return c_; }
	bool is_zero() const { return c_.empty(); }

	Element operator+(Element const &o) const;
	Element operator-(Element const &o) const;
	Element operator-() const;
	Element operator*(Scalar const &s) const;
	Element operator*(Element const &o) const; // algebra product
	bool operator==(Element const &o) const;

	std::string str() const;

  private:
	void check_same(Element const &o) const;
	Algebra alg_;
	Vec<Scalar> c_;
};

/// Dense linear operator on an Algebra; rows are indexed by the input
/// basis index: (u . Op)_j = sum_i u_i M[i][j].
class LinOp {
  public:
	LinOp() = default;
	LinOp(Algebra alg, std::vector<Vec<Scalar>> rows)
	    : alg_(std::move(alg)), rows_(std::move(rows))
	{
	}
	static LinOp zero(Algebra const &a);
	static LinOp identity(Algebra const &a);

	Algebra const &algebra() const { return alg_; }
	Vec<Scalar> const &row(int i) const { return rows_[i]; }
	std::vector<Vec<Scalar>> const &rows() const { return rows_; }

	Element apply(Element const &u) const;
	LinOp operator*(LinOp const &o) const; // composition, word order
	LinOp operator+(LinOp const &o) const;
	LinOp operator-(LinOp const &o) const;
	LinOp operator*(Scalar const &s) const;
	bool is_zero() const;
	bool operator==(LinOp const &o) const;

	/// Flattened sparse view (index i*dim+j) for span computations.
	Vec<Scalar> flatten() const;

  private:
	Algebra alg_;
	std::vector<Vec<Scalar>> rows_;
};

/// Reduced-row-echelon basis of sparse vectors of a fixed width.
/// Pivots strictly increase; pivot entries are 1 and their columns clear.
class Echelon {
  public:
	Echelon() = default;
	Echelon(Field f, int width) : field_(f), width_(width) {}

	int width() const { return width_; }
	std::size_t dim() const { return rows_.size(); }
	std::vector<Vec<Scalar>> const &rows() const { return rows_; }
	std::vector<int> const &pivots() const { return pivots_; }

	/// Residual of v after reduction by the current rows.
	Vec<Scalar> reduce(Vec<Scalar> v) const;
	/// Inserts v's residual; returns true if the dimension grew.
	bool insert(Vec<Scalar> v);
	bool contains(Vec<Scalar> const &v) const { return reduce(v).empty(); }
	/// Coordinates of v in the row basis; requires membership.
	std::vector<Scalar> coordinates(Vec<Scalar> const &v) const;

	bool operator==(Echelon const &o) const
	{
		return pivots_ == o.pivots_ && rows_ == o.rows_;
	}

  private:
	Field field_;
	int width_ = 0;
	std::vector<Vec<Scalar>> rows_;
	std::vector<int> pivots_;
};

/// Subspace of an Algebra kept in reduced row-echelon form.
class Subspace {
  public:
	Subspace() = default;
	explicit Subspace(Algebra alg)
	    : alg_(std::move(alg)), ech_(alg_.field(), (int)alg_.dim())
	{
	}
	Subspace(Algebra alg, std::vector<Element> const &gens);

	Algebra const &algebra() const { return alg_; }
	Echelon const &echelon() const { return ech_; }
	std::size_t dim() const { return ech_.dim(); }
	bool insert(Element const &e) { return ech_.insert(e.coeffs()); }
	bool contains(Element const &e) const { return ech_.contains(e.coeffs()); }
	std::vector<Element> basis() const;
	bool operator==(Subspace const &o) const
	{
		return alg_.same(o.alg_) && ech_ == o.ech_;
	}

  private:
	Algebra alg_;
	Echelon ech_;
};

// ---- operations ------------------------------------------------------

Element mul(Element const &u, Element const &v);
LinOp right_mul(Algebra const &a, Element const &x);
LinOp left_mul(Algebra const &a, Element const &x);
/// V_{x,y} = L_x R_y : u -> (x u) y.
LinOp v_op(Algebra const &a, Element const &x, Element const &y);
Element commutator(Element const &u, Element const &v);
Element associator(Element const &u, Element const &v, Element const &w);

/// Symbolic identity check: substitutes x_i -> sum_k t_{i,k} e_k with
/// commuting indeterminates and tests that every coefficient vanishes as a
/// polynomial. Terms are sums of product trees with scalar coefficients.
using TermSum = std::vector<std::pair<Scalar, Term>>;

struct IdentityResult {
	bool holds = false;
	/// Concrete falsifying substitution, when one exists over the field.
	std::optional<std::map<int, Element>> witness;
	std::string witness_text;
};

IdentityResult is_identity(Algebra const &a, TermSum const &f);
IdentityResult is_identity(Algebra const &a, Term const &t);

struct VarietyReport {
	IdentityResult lie_center;      // [[a,b],c] = 0
	IdentityResult right_kill;      // (a b) a = 0
	IdentityResult square_product;  // (a b)(c d) = 0
	bool pass() const
	{
		return lie_center.holds && right_kill.holds && square_product.holds;
	}
};

VarietyReport check_variety_r(Algebra const &a);

Subspace left_annihilator(Algebra const &a);
Subspace subalgebra(Algebra const &a, std::vector<Element> const &gens);
Subspace ideal(Algebra const &a, std::vector<Element> const &gens);

struct Quotient {
	Algebra algebra;
	/// Projection matrix: row i = image of ambient basis e_i in the
	/// quotient basis.
	std::vector<Vec<Scalar>> projection;

	Element project(Element const &u) const;
};

Quotient quotient(Algebra const &a, Subspace const &ideal_subspace);

/// Turns a product-closed subspace into an Algebra on its echelon basis.
struct SubalgebraView {
	Algebra algebra;              // induced structure constants
	std::vector<Element> embedding; // basis of the view inside the ambient
	Subspace span;

	/// Ambient element -> coordinates in the view; requires membership.
	Element pull_back(Element const &ambient_elem) const;
};

SubalgebraView subalgebra_as_algebra(Algebra const &ambient, Subspace const &s,
                                     std::vector<std::string> names = {});

/// Tensor product C (x) A with C commutative associative (verified).
Algebra tensor(Algebra const &c, Algebra const &a);

/// Commutative associative unital algebra F[h_1..h_n]/(h_i^2), basis the
/// squarefree monomials. Basis index = bitmask of generators present.
Algebra squarefree_algebra(int n, Field f);

} // namespace rsym
