#pragma once

#include "schur/sparse_matrix.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schur {

struct NotNilpotent : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Finite-dimensional Lie algebra over Q given by structure constants on a
// labeled basis e_0..e_{N-1}. Only brackets [e_i, e_j] with i < j are
// stored; the rest follow from antisymmetry.
class LieAlgebra {
public:
	using Structure = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

	explicit LieAlgebra(std::size_t dim = 0);
	LieAlgebra(std::size_t dim, std::vector<std::string> labels);

	std::size_t dim() const { return labels_.size(); }
	const std::vector<std::string> &labels() const { return labels_; }
	const Structure &structure() const { return structure_; }

	// Sets [e_i, e_j] = value. Requires i < j < dim and value coordinates
	// < dim; throws std::invalid_argument otherwise. A zero value clears the
	// bracket.
	void set_bracket(std::size_t i, std::size_t j, SparseVector value);

	// [e_i, e_j] for any i, j.
	SparseVector bracket(std::size_t i, std::size_t j) const;
	// Bilinear extension to coordinate vectors.
	SparseVector bracket(const SparseVector &u, const SparseVector &v) const;
	// Coefficient of e_k in [e_i, e_j].
	Rational constant(std::size_t i, std::size_t j, std::size_t k) const;

	friend bool operator==(const LieAlgebra &, const LieAlgebra &) = default;

private:
	std::vector<std::string> labels_;
	Structure structure_;
};

std::vector<std::string> default_labels(std::size_t dim);

SparseVector basis_vector(std::size_t i);

struct Validation {
	bool ok = true;
	// First failing triple (i < j < k, zero-based) and its Jacobi sum.
	std::optional<std::array<std::size_t, 3>> triple;
	SparseVector jacobi_sum;

	explicit operator bool() const { return ok; }
	std::string message() const;
};

// Checks the Jacobi identity on every basis triple i < j < k.
Validation validate(const LieAlgebra &algebra);

// A subspace of Q^N stored by its canonical reduced row-echelon basis, so
// equal subspaces compare equal.
class Subspace {
public:
	explicit Subspace(std::size_t ambient_dim = 0) : basis_(0, ambient_dim) {}
	static Subspace whole(std::size_t ambient_dim);
	static Subspace span(std::size_t ambient_dim, const std::vector<SparseVector> &vectors);

	std::size_t ambient_dim() const { return basis_.cols(); }
	std::size_t dim() const { return basis_.rows(); }
	bool is_zero() const { return dim() == 0; }
	const SparseMatrix &basis() const { return basis_; }
	std::vector<SparseVector> vectors() const;

	// Pivot column of each basis row, in row order.
	std::vector<std::size_t> pivots() const;
	// v minus its component along the pivots; zero iff v lies in the subspace.
	SparseVector reduce(SparseVector v) const;
	bool contains(const SparseVector &v) const { return reduce(v).empty(); }

	friend bool operator==(const Subspace &, const Subspace &) = default;

private:
	SparseMatrix basis_;
};

// Span of [u, v] over basis vectors u of U and v of V.
Subspace product_space(const LieAlgebra &algebra, const Subspace &u, const Subspace &v);

// L^1 = L, L^{k+1} = [L, L^k], stopping at the first repeated term (which is
// not listed twice).
std::vector<Subspace> lower_central_series(const LieAlgebra &algebra);

bool is_nilpotent(const LieAlgebra &algebra);

// Smallest c with L^{c+1} = 0. Requires dim >= 1; throws NotNilpotent.
std::size_t nilpotency_class(const LieAlgebra &algebra);

// dim L - dim L^2. Throws NotNilpotent.
std::size_t min_generators(const LieAlgebra &algebra);

// L / L^c on the standard basis vectors complementing the echelon basis of
// L^c, in index order. Requires class c >= 2.
LieAlgebra quotient_by_last_term(const LieAlgebra &algebra);

} // namespace schur
