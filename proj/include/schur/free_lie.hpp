#pragma once

#include "schur/lie_algebra.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace schur {

// A Hall tree: a generator, or a bracket (left, right) of earlier trees.
// `index` is the tree's position in its HallBasis, which is also the total
// order used by the Hall conditions.
struct HallTree {
	std::size_t index = 0;
	std::size_t degree = 1;
	std::size_t generator = 0; // leaves only
	std::optional<std::size_t> left, right;

	bool is_leaf() const { return !left.has_value(); }
	friend bool operator==(const HallTree &, const HallTree &) = default;
};

// All Hall trees of degree <= max_degree on n generators, ordered by degree
// and then by construction within a degree. A bracket (u, v) is in the set
// iff u > v and, when u = (a, b), b <= v.
class HallBasis {
public:
	HallBasis(std::size_t generators, std::size_t max_degree);

	std::size_t generators() const { return generators_; }
	std::size_t max_degree() const { return max_degree_; }
	std::size_t size() const { return trees_.size(); }
	const HallTree &operator[](std::size_t i) const { return trees_.at(i); }
	const std::vector<HallTree> &trees() const { return trees_; }

	// counts[d - 1] = number of trees of degree d.
	std::vector<std::size_t> degree_counts() const;
	std::optional<std::size_t> find(std::size_t left, std::size_t right) const;
	bool contains(const HallTree &t) const { return t.index < size() && trees_[t.index] == t; }

	// Nested bracket notation over generator names x1..xn, e.g. "[[x2,x1],x1]".
	std::string label(std::size_t index) const;

private:
	std::size_t generators_;
	std::size_t max_degree_;
	std::vector<HallTree> trees_;
	std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_children_;
};

HallBasis hall_basis(std::size_t n, std::size_t max_degree);

// Linear combination of Hall trees, keyed by basis index.
using LieElement = SparseVector;

// Rewrites brackets of Hall trees in the Hall basis, truncating everything of
// degree above max_degree. Keeps a memo table, so one collector should serve a
// single computation (it is not thread-safe).
class BracketCollector {
public:
	BracketCollector(const HallBasis &basis, std::size_t max_degree);

	const LieElement &bracket(std::size_t u, std::size_t v);

private:
	LieElement bracket_left(const LieElement &x, std::size_t v);
	LieElement bracket_right(std::size_t u, const LieElement &y);

	const HallBasis &basis_;
	std::size_t max_degree_;
	std::map<std::pair<std::size_t, std::size_t>, LieElement> memo_;
	std::set<std::pair<std::size_t, std::size_t>> active_;
};

// [u, v] expanded in the Hall basis (zero above max_degree). Throws
// std::invalid_argument if u or v is not a tree of `basis`, or max_degree
// exceeds the basis.
LieElement collect_bracket(const HallBasis &basis, const HallTree &u, const HallTree &v,
                           std::size_t max_degree);

// The free nilpotent Lie algebra F/F^{c+1} on n generators, on the Hall basis
// of degree <= c.
LieAlgebra free_nilpotent(std::size_t n, std::size_t c);

} // namespace schur
