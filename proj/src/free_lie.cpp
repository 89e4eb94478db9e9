#include "schur/free_lie.hpp"

#include <stdexcept>

namespace schur {

HallBasis::HallBasis(std::size_t generators, std::size_t max_degree)
    : generators_(generators), max_degree_(max_degree)
{
	if (generators == 0 || max_degree == 0)
		throw std::invalid_argument("hall_basis: generator count and degree must be positive");

	for (std::size_t g = 0; g < generators; ++g)
		trees_.push_back(HallTree{trees_.size(), 1, g, std::nullopt, std::nullopt});

	for (std::size_t d = 2; d <= max_degree; ++d) {
		const std::size_t existing = trees_.size();
		for (std::size_t u = 0; u < existing; ++u) {
			const HallTree tu = trees_[u];
			if (tu.degree >= d)
				break;
			for (std::size_t v = 0; v < u; ++v) {
				if (trees_[v].degree + tu.degree != d)
					continue;
				if (!tu.is_leaf() && *tu.right > v)
					continue;
				std::size_t idx = trees_.size();
				trees_.push_back(HallTree{idx, d, 0, u, v});
				by_children_.emplace(std::pair{u, v}, idx);
			}
		}
	}
}

std::vector<std::size_t> HallBasis::degree_counts() const
{
	std::vector<std::size_t> counts(max_degree_, 0);
	for (const auto &t : trees_)
		++counts[t.degree - 1];
	return counts;
}

std::optional<std::size_t> HallBasis::find(std::size_t left, std::size_t right) const
{
	auto it = by_children_.find({left, right});
	if (it == by_children_.end())
		return std::nullopt;
	return it->second;
}

std::string HallBasis::label(std::size_t index) const
{
	const HallTree &t = trees_.at(index);
	if (t.is_leaf())
		return "x" + std::to_string(t.generator + 1);
	return "[" + label(*t.left) + "," + label(*t.right) + "]";
}

HallBasis hall_basis(std::size_t n, std::size_t max_degree)
{
	return HallBasis(n, max_degree);
}

BracketCollector::BracketCollector(const HallBasis &basis, std::size_t max_degree)
    : basis_(basis), max_degree_(max_degree)
{
	if (max_degree > basis.max_degree())
		throw std::invalid_argument("collector degree exceeds the Hall basis degree");
}

const LieElement &BracketCollector::bracket(std::size_t u, std::size_t v)
{
	static const LieElement zero;
	const HallTree &tu = basis_[u];
	const HallTree &tv = basis_[v];
	if (u == v || tu.degree + tv.degree > max_degree_)
		return zero;

	auto key = std::pair{u, v};
	if (auto it = memo_.find(key); it != memo_.end())
		return it->second;
	if (!active_.insert(key).second)
		throw std::logic_error("Hall collection revisited [" + basis_.label(u) + ", " +
		                       basis_.label(v) + "]");

	LieElement result;
	if (u < v) {
		for (const auto &[k, x] : bracket(v, u))
			result.emplace(k, -x);
	} else if (tu.is_leaf() || *tu.right <= v) {
		result.emplace(*basis_.find(u, v), Rational(1));
	} else {
		// [[a,b],v] = [[a,v],b] + [a,[b,v]]
		const std::size_t a = *tu.left, b = *tu.right;
		LieElement av = bracket(a, v);
		LieElement bv = bracket(b, v);
		result = bracket_left(av, b);
		axpy(result, Rational(1), bracket_right(a, bv));
	}

	active_.erase(key);
	return memo_.emplace(key, std::move(result)).first->second;
}

LieElement BracketCollector::bracket_left(const LieElement &x, std::size_t v)
{
	LieElement out;
	for (const auto &[k, c] : x)
		axpy(out, c, LieElement(bracket(k, v)));
	return out;
}

LieElement BracketCollector::bracket_right(std::size_t u, const LieElement &y)
{
	LieElement out;
	for (const auto &[k, c] : y)
		axpy(out, c, LieElement(bracket(u, k)));
	return out;
}

LieElement collect_bracket(const HallBasis &basis, const HallTree &u, const HallTree &v,
                           std::size_t max_degree)
{
	if (!basis.contains(u) || !basis.contains(v))
		throw std::invalid_argument("collect_bracket: tree not from the given Hall basis");
	BracketCollector collector(basis, max_degree);
	return collector.bracket(u.index, v.index);
}

LieAlgebra free_nilpotent(std::size_t n, std::size_t c)
{
	HallBasis basis(n, c);
	std::vector<std::string> labels;
	labels.reserve(basis.size());
	for (std::size_t i = 0; i < basis.size(); ++i)
		labels.push_back(basis.label(i));

	LieAlgebra algebra(basis.size(), std::move(labels));
	BracketCollector collector(basis, c);
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = i + 1; j < basis.size(); ++j) {
			const LieElement &value = collector.bracket(i, j);
			for (const auto &[k, x] : value)
				if (!x.is_integer())
					throw std::logic_error("non-integral structure constant in free nilpotent algebra");
			algebra.set_bracket(i, j, value);
		}
	return algebra;
}

} // namespace schur
