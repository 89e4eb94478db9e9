#include "schur/bounds.hpp"

#include "schur/free_lie.hpp"
#include "schur/multiplier.hpp"
#include "schur/witt.hpp"

namespace schur {

namespace {

std::uint64_t pairs(std::size_t dim)
{
	return static_cast<std::uint64_t>(dim) * (dim ? dim - 1 : 0) / 2;
}

std::size_t derived_dim(const LieAlgebra &algebra)
{
	auto whole = Subspace::whole(algebra.dim());
	return product_space(algebra, whole, whole).dim();
}

} // namespace

BigInt bound_new(const LieAlgebra &algebra)
{
	std::size_t c = nilpotency_class(algebra);
	return bound_class_generators(min_generators(algebra), c);
}

std::int64_t bound_hardy(const LieAlgebra &algebra)
{
	return static_cast<std::int64_t>(pairs(algebra.dim())) -
	       static_cast<std::int64_t>(derived_dim(algebra));
}

std::uint64_t bound_moneyhun(const LieAlgebra &algebra)
{
	return pairs(algebra.dim());
}

NontrivialityVerdict verify_nontriviality(const LieAlgebra &algebra)
{
	if (!is_nilpotent(algebra))
		throw NotNilpotent("nontriviality check needs a nilpotent algebra");
	NontrivialityVerdict v;
	v.dim = algebra.dim();
	v.multiplier = multiplier_dimension(algebra);
	if (v.dim <= 1)
		v.status = v.multiplier == 0 ? NontrivialityStatus::hypothesis_not_met
		                             : NontrivialityStatus::fail;
	else
		v.status = v.multiplier >= 1 ? NontrivialityStatus::pass : NontrivialityStatus::fail;
	return v;
}

bool EulerCheck::ok() const
{
	if (alternating_sum != 0)
		return false;
	if (image_term != multiplier || quotient_multiplier != last_term)
		return false;
	if (computed_multiplier && multiplier != *computed_multiplier)
		return false;
	if (computed_quotient_multiplier && quotient_multiplier != *computed_quotient_multiplier)
		return false;
	if (computed_last_term && last_term != *computed_last_term)
		return false;
	return true;
}

EulerCheck euler_identity_free_nilpotent(std::size_t n, std::size_t c, std::size_t max_homology_dim)
{
	if (n < 2 || c < 2)
		throw std::invalid_argument("euler_identity_free_nilpotent: needs n >= 2 and c >= 2");
	EulerCheck e;
	e.n = n;
	e.c = c;
	// Image of sigma: l_n(c+1).
	e.image_term = witt_dimension(n, c + 1);
	e.multiplier = multiplier_of_free_nilpotent(n, c);
	e.quotient_multiplier = multiplier_of_free_nilpotent(n, c - 1);
	e.last_term = witt_dimension(n, c);
	e.alternating_sum = e.image_term - e.multiplier + e.quotient_multiplier - e.last_term;

	std::size_t dim = 0;
	for (std::size_t d = 1; d <= c; ++d)
		dim += witt_dimension(n, d).get_ui();
	if (dim <= max_homology_dim) {
		LieAlgebra algebra = free_nilpotent(n, c);
		auto series = lower_central_series(algebra);
		e.computed_last_term = series.size() > c ? series[c - 1].dim() : 0;
		e.computed_multiplier = multiplier_dimension(algebra);
		e.computed_quotient_multiplier = multiplier_dimension(quotient_by_last_term(algebra));
	}
	return e;
}

InductiveStep inductive_bound_step(const LieAlgebra &algebra)
{
	std::size_t n = min_generators(algebra);
	std::size_t c = nilpotency_class(algebra);
	LieAlgebra quotient = quotient_by_last_term(algebra);
	return {bound_new(algebra), bound_new(quotient), witt_dimension(n, c + 1)};
}

std::string to_string(Winner w)
{
	switch (w) {
	case Winner::new_bound:
		return "new";
	case Winner::hardy:
		return "hardy";
	case Winner::tie:
		return "tie";
	}
	return "?";
}

bool BoundReport::sound() const
{
	return bound_new >= static_cast<unsigned long>(multiplier_dim) &&
	       bound_hardy >= static_cast<std::int64_t>(multiplier_dim) &&
	       bound_moneyhun >= multiplier_dim && nontrivial_ok;
}

BoundReport compare(const LieAlgebra &algebra, const std::string &name)
{
	BoundReport r;
	r.algebra_name = name;
	r.dim = algebra.dim();
	r.class_c = nilpotency_class(algebra);
	r.generators_n = min_generators(algebra);
	r.dim_derived = derived_dim(algebra);
	r.multiplier_dim = multiplier_dimension(algebra);
	r.bound_new = bound_class_generators(r.generators_n, r.class_c);
	r.bound_hardy = static_cast<std::int64_t>(pairs(r.dim)) - static_cast<std::int64_t>(r.dim_derived);
	r.bound_moneyhun = pairs(r.dim);
	if (r.bound_new < r.bound_hardy)
		r.winner = Winner::new_bound;
	else if (r.bound_new > r.bound_hardy)
		r.winner = Winner::hardy;
	else
		r.winner = Winner::tie;
	r.nontrivial_ok = r.dim > 1 ? r.multiplier_dim >= 1 : r.multiplier_dim == 0;
	return r;
}

} // namespace schur
