#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>

namespace rsym {

/// Binary product tree over variables x1, x2, ... (element of the free
/// nonassociative magma). Immutable, shared by value.
class Term {
  public:
	static Term leaf(int var)
	{
		Term t;
		t.n_ = std::make_shared<Node>(Node{var, nullptr, nullptr});
		return t;
	}
	static Term prod(Term const &l, Term const &r)
	{
		Term t;
		t.n_ = std::make_shared<Node>(Node{0, l.n_, r.n_});
		return t;
	}

	bool is_leaf() const { return n_->var > 0; }
	int var() const { return n_->var; }
	Term left() const { return Term(n_->left); }
	Term right() const { return Term(n_->right); }

	int degree() const
	{
		return is_leaf() ? 1 : left().degree() + right().degree();
	}
	int degree_in(int v) const
	{
		if (is_leaf())
			return var() == v ? 1 : 0;
		return left().degree_in(v) + right().degree_in(v);
	}
	int max_var() const
	{
		if (is_leaf())
			return var();
		return std::max(left().max_var(), right().max_var());
	}
	void variables(std::set<int> &out) const
	{
		if (is_leaf())
			out.insert(var());
		else
		{
			left().variables(out);
			right().variables(out);
		}
	}

	/// Replace leaves of variable v by the given term.
	Term substitute(int v, Term const &repl) const
	{
		if (is_leaf())
			return var() == v ? repl : *this;
		return prod(left().substitute(v, repl), right().substitute(v, repl));
	}

	std::string str() const
	{
		if (is_leaf())
			return "x" + std::to_string(var());
		return "(" + left().str() + " " + right().str() + ")";
	}

  private:
	struct Node {
		int var;
		std::shared_ptr<const Node> left, right;
	};
	Term() = default;
	explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
	std::shared_ptr<const Node> n_;
};

} // namespace rsym
