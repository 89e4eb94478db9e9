#include "schur/lie_algebra.hpp"

#include <sstream>

namespace schur {

std::vector<std::string> default_labels(std::size_t dim)
{
	std::vector<std::string> labels;
	labels.reserve(dim);
	for (std::size_t i = 1; i <= dim; ++i)
		labels.push_back("e" + std::to_string(i));
	return labels;
}

SparseVector basis_vector(std::size_t i)
{
	return SparseVector{{i, Rational(1)}};
}

LieAlgebra::LieAlgebra(std::size_t dim) : labels_(default_labels(dim)) {}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels) : labels_(std::move(labels))
{
	if (labels_.size() != dim)
		throw std::invalid_argument("expected " + std::to_string(dim) + " labels, got " +
		                            std::to_string(labels_.size()));
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, SparseVector value)
{
	if (i >= j)
		throw std::invalid_argument("bracket must be stored with i < j");
	if (j >= dim())
		throw std::invalid_argument("bracket index out of range");
	std::erase_if(value, [](const auto &kv) { return kv.second.is_zero(); });
	if (!value.empty() && value.rbegin()->first >= dim())
		throw std::invalid_argument("bracket value index out of range");
	if (value.empty())
		structure_.erase({i, j});
	else
		structure_[{i, j}] = std::move(value);
}

SparseVector LieAlgebra::bracket(std::size_t i, std::size_t j) const
{
	if (i == j)
		return {};
	bool flip = i > j;
	auto it = structure_.find(flip ? std::pair{j, i} : std::pair{i, j});
	if (it == structure_.end())
		return {};
	if (!flip)
		return it->second;
	SparseVector out;
	for (const auto &[k, v] : it->second)
		out.emplace(k, -v);
	return out;
}

SparseVector LieAlgebra::bracket(const SparseVector &u, const SparseVector &v) const
{
	SparseVector out;
	for (const auto &[a, ua] : u)
		for (const auto &[b, vb] : v) {
			if (a == b)
				continue;
			bool flip = a > b;
			auto it = structure_.find(flip ? std::pair{b, a} : std::pair{a, b});
			if (it == structure_.end())
				continue;
			Rational scale = ua * vb;
			axpy(out, flip ? -scale : scale, it->second);
		}
	return out;
}

Rational LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const
{
	auto b = bracket(i, j);
	auto it = b.find(k);
	return it == b.end() ? Rational() : it->second;
}

std::string Validation::message() const
{
	if (ok)
		return "ok";
	std::ostringstream os;
	const auto &t = *triple;
	os << "Jacobi identity fails on triple (" << t[0] + 1 << ", " << t[1] + 1 << ", " << t[2] + 1
	   << "): sum =";
	for (const auto &[k, v] : jacobi_sum)
		os << ' ' << v << "*e" << k + 1;
	return os.str();
}

Validation validate(const LieAlgebra &algebra)
{
	const std::size_t n = algebra.dim();
	std::vector<SparseVector> e;
	e.reserve(n);
	for (std::size_t i = 0; i < n; ++i)
		e.push_back(basis_vector(i));

	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) {
			SparseVector ij = algebra.bracket(i, j);
			for (std::size_t k = j + 1; k < n; ++k) {
				// [[i,j],k] + [[j,k],i] + [[k,i],j]
				SparseVector sum = algebra.bracket(ij, e[k]);
				axpy(sum, Rational(1), algebra.bracket(algebra.bracket(j, k), e[i]));
				axpy(sum, Rational(1), algebra.bracket(algebra.bracket(k, i), e[j]));
				if (!sum.empty())
					return Validation{false, std::array{i, j, k}, std::move(sum)};
			}
		}
	return {};
}

Subspace Subspace::whole(std::size_t ambient_dim)
{
	Subspace s(ambient_dim);
	s.basis_ = SparseMatrix::identity(ambient_dim);
	return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<SparseVector> &vectors)
{
	SparseMatrix m(0, ambient_dim);
	for (const auto &v : vectors)
		m.append_row(v);
	Subspace s(ambient_dim);
	s.basis_ = row_space_canonical(m);
	return s;
}

std::vector<SparseVector> Subspace::vectors() const
{
	std::vector<SparseVector> out;
	out.reserve(dim());
	for (std::size_t r = 0; r < dim(); ++r)
		out.push_back(basis_.row(r));
	return out;
}

std::vector<std::size_t> Subspace::pivots() const
{
	std::vector<std::size_t> out;
	out.reserve(dim());
	for (std::size_t r = 0; r < dim(); ++r)
		out.push_back(basis_.row(r).begin()->first);
	return out;
}

SparseVector Subspace::reduce(SparseVector v) const
{
	for (std::size_t r = 0; r < dim(); ++r) {
		const auto &row = basis_.row(r);
		auto it = v.find(row.begin()->first);
		if (it != v.end())
			axpy(v, -Rational(it->second), row);
	}
	return v;
}

Subspace product_space(const LieAlgebra &algebra, const Subspace &u, const Subspace &v)
{
	if (u.ambient_dim() != algebra.dim() || v.ambient_dim() != algebra.dim())
		throw DimensionMismatch("product_space: subspace ambient dimension differs from algebra");
	std::vector<SparseVector> products;
	for (const auto &a : u.vectors())
		for (const auto &b : v.vectors()) {
			SparseVector p = algebra.bracket(a, b);
			if (!p.empty())
				products.push_back(std::move(p));
		}
	return Subspace::span(algebra.dim(), products);
}

std::vector<Subspace> lower_central_series(const LieAlgebra &algebra)
{
	const Subspace whole = Subspace::whole(algebra.dim());
	std::vector<Subspace> series{whole};
	for (;;) {
		Subspace next = product_space(algebra, whole, series.back());
		if (next == series.back())
			return series;
		series.push_back(std::move(next));
	}
}

bool is_nilpotent(const LieAlgebra &algebra)
{
	return lower_central_series(algebra).back().is_zero();
}

namespace {

std::vector<Subspace> nilpotent_series(const LieAlgebra &algebra)
{
	auto series = lower_central_series(algebra);
	if (!series.back().is_zero())
		throw NotNilpotent("lower central series stabilizes at a subspace of dimension " +
		                   std::to_string(series.back().dim()));
	return series;
}

} // namespace

std::size_t nilpotency_class(const LieAlgebra &algebra)
{
	if (algebra.dim() == 0)
		throw std::invalid_argument("nilpotency_class: zero-dimensional algebra");
	return nilpotent_series(algebra).size() - 1;
}

std::size_t min_generators(const LieAlgebra &algebra)
{
	auto series = nilpotent_series(algebra);
	std::size_t derived = series.size() > 1 ? series[1].dim() : 0;
	return algebra.dim() - derived;
}

LieAlgebra quotient_by_last_term(const LieAlgebra &algebra)
{
	if (algebra.dim() == 0)
		throw std::invalid_argument("quotient_by_last_term: zero-dimensional algebra");
	auto series = nilpotent_series(algebra);
	std::size_t c = series.size() - 1;
	if (c < 2)
		throw std::invalid_argument("quotient_by_last_term: class " + std::to_string(c) +
		                            " < 2");
	const Subspace &last = series[c - 1];

	std::vector<bool> is_pivot(algebra.dim(), false);
	for (std::size_t p : last.pivots())
		is_pivot[p] = true;
	std::vector<std::size_t> keep;
	std::vector<std::size_t> position(algebra.dim(), 0);
	std::vector<std::string> labels;
	for (std::size_t i = 0; i < algebra.dim(); ++i)
		if (!is_pivot[i]) {
			position[i] = keep.size();
			keep.push_back(i);
			labels.push_back(algebra.labels()[i]);
		}

	LieAlgebra quotient(keep.size(), std::move(labels));
	for (std::size_t a = 0; a < keep.size(); ++a)
		for (std::size_t b = a + 1; b < keep.size(); ++b) {
			SparseVector image;
			for (const auto &[k, v] : last.reduce(algebra.bracket(keep[a], keep[b])))
				image.emplace(position[k], v);
			quotient.set_bracket(a, b, std::move(image));
		}
	return quotient;
}

} // namespace schur
