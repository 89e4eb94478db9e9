#pragma once

#include "schur/lie_algebra.hpp"
#include "schur/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace schur {

// Class/generator bound: sum_{j=1}^{c} l_n(j+1) with n = min_generators(L)
// and c = nilpotency_class(L). Throws NotNilpotent.
BigInt bound_new(const LieAlgebra &algebra);

// dim(dim - 1)/2 - dim L^2, with dim the dimension of L (not its generator
// count). Never clamped.
std::int64_t bound_hardy(const LieAlgebra &algebra);

// dim(dim - 1)/2.
std::uint64_t bound_moneyhun(const LieAlgebra &algebra);

enum class NontrivialityStatus { pass, fail, hypothesis_not_met };

struct NontrivialityVerdict {
	NontrivialityStatus status = NontrivialityStatus::pass;
	std::size_t dim = 0;
	std::size_t multiplier = 0;
	bool ok() const { return status != NontrivialityStatus::fail; }
};

// For nilpotent L of dimension > 1, the multiplier must be nonzero. Smaller
// algebras report hypothesis_not_met (a nonzero multiplier there is a fail).
// Throws NotNilpotent.
NontrivialityVerdict verify_nontriviality(const LieAlgebra &algebra);

// Dimension bookkeeping for the four-term exact sequence
//   0 -> F^{c+1}/([F,R] ∩ F^{c+1}) -> M(L) -> M(L/L^c) -> L^c -> 0
// with L = F/F^{c+1} free nilpotent, where every term has a closed form.
struct EulerCheck {
	std::size_t n = 0, c = 0;
	BigInt image_term;        // l_n(c+1)
	BigInt multiplier;        // dim M(L) = l_n(c+1)
	BigInt quotient_multiplier; // dim M(L/L^c) = l_n(c)
	BigInt last_term;         // dim L^c = l_n(c)
	BigInt alternating_sum;

	// Present when the homological cross-check ran.
	std::optional<std::size_t> computed_multiplier;
	std::optional<std::size_t> computed_quotient_multiplier;
	std::optional<std::size_t> computed_last_term;

	bool cross_checked() const { return computed_multiplier.has_value(); }
	bool ok() const;
};

// Requires n >= 2, c >= 2. Constructs the algebras and compares against
// homology when dim F/F^{c+1} <= max_homology_dim.
EulerCheck euler_identity_free_nilpotent(std::size_t n, std::size_t c,
                                         std::size_t max_homology_dim = 35);

struct InductiveStep {
	BigInt bound;          // bound_new(L)
	BigInt quotient_bound; // bound_new(L / L^c)
	BigInt top_term;       // l_n(c+1)
	bool ok() const { return bound == quotient_bound + top_term; }
};

// Splits bound_new(L) along the last lower-central term. Requires class >= 2.
InductiveStep inductive_bound_step(const LieAlgebra &algebra);

enum class Winner { new_bound, hardy, tie };

std::string to_string(Winner w);

struct BoundReport {
	std::string algebra_name;
	std::size_t dim = 0;
	std::size_t class_c = 0;
	std::size_t generators_n = 0;
	std::size_t dim_derived = 0;
	std::size_t multiplier_dim = 0;
	BigInt bound_new;
	std::int64_t bound_hardy = 0;
	std::uint64_t bound_moneyhun = 0;
	Winner winner = Winner::tie;
	bool nontrivial_ok = true;

	// Every bound dominates the multiplier and the nontriviality verdict holds.
	bool sound() const;
};

// Throws NotNilpotent; requires dim >= 1.
BoundReport compare(const LieAlgebra &algebra, const std::string &name);

} // namespace schur
