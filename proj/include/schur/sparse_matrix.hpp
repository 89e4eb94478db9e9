#pragma once

#include "schur/rational.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace schur {

// Sparse vector over Q keyed by coordinate; never stores a zero.
using SparseVector = std::map<std::size_t, Rational>;

// v += scale * w, dropping entries that cancel.
void axpy(SparseVector &v, const Rational &scale, const SparseVector &w);

struct DimensionMismatch : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

// Row-major sparse matrix over Q.
class SparseMatrix {
public:
	SparseMatrix() = default;
	SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

	// Builds a matrix from dense integer rows; handy for small fixtures.
	static SparseMatrix from_dense(const std::vector<std::vector<long>> &rows, std::size_t cols);
	static SparseMatrix identity(std::size_t n);

	std::size_t rows() const { return data_.size(); }
	std::size_t cols() const { return cols_; }
	std::size_t nnz() const;

	Rational get(std::size_t r, std::size_t c) const;
	// Setting zero erases the entry.
	void set(std::size_t r, std::size_t c, const Rational &value);
	void add(std::size_t r, std::size_t c, const Rational &value);

	const SparseVector &row(std::size_t r) const { return data_.at(r); }
	// Appends a row; its coordinates must be < cols().
	void append_row(SparseVector row);

	bool is_zero() const { return nnz() == 0; }
	SparseMatrix transpose() const;

	friend bool operator==(const SparseMatrix &, const SparseMatrix &) = default;

private:
	void check_index(std::size_t r, std::size_t c) const;

	std::size_t cols_ = 0;
	std::vector<SparseVector> data_;
};

// Exact rank over Q by fraction-free sparse elimination.
std::size_t rank(const SparseMatrix &m);

// cols - rank.
std::size_t nullity(const SparseMatrix &m);

// Throws DimensionMismatch unless a.cols() == b.rows().
SparseMatrix multiply(const SparseMatrix &a, const SparseMatrix &b);

// Reduced row-echelon form with zero rows removed, rows ordered by pivot
// column. Equal row spaces give identical results.
SparseMatrix row_space_canonical(const SparseMatrix &m);

std::string to_string(const SparseMatrix &m);

} // namespace schur
