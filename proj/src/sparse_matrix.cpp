#include "schur/sparse_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace schur {

void axpy(SparseVector &v, const Rational &scale, const SparseVector &w)
{
	if (scale.is_zero())
		return;
	for (const auto &[k, x] : w) {
		auto [it, inserted] = v.try_emplace(k, scale * x);
		if (!inserted) {
			it->second += scale * x;
			if (it->second.is_zero())
				v.erase(it);
		}
	}
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<long>> &rows, std::size_t cols)
{
	SparseMatrix m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r) {
		if (rows[r].size() != cols)
			throw DimensionMismatch("dense row has wrong length");
		for (std::size_t c = 0; c < cols; ++c)
			m.set(r, c, Rational(rows[r][c]));
	}
	return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n)
{
	SparseMatrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m.set(i, i, Rational(1));
	return m;
}

std::size_t SparseMatrix::nnz() const
{
	std::size_t total = 0;
	for (const auto &r : data_)
		total += r.size();
	return total;
}

void SparseMatrix::check_index(std::size_t r, std::size_t c) const
{
	if (r >= rows() || c >= cols_)
		throw std::out_of_range("matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
		                        ") outside " + std::to_string(rows()) + "x" + std::to_string(cols_));
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const
{
	check_index(r, c);
	auto it = data_[r].find(c);
	return it == data_[r].end() ? Rational() : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational &value)
{
	check_index(r, c);
	if (value.is_zero())
		data_[r].erase(c);
	else
		data_[r][c] = value;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational &value)
{
	check_index(r, c);
	axpy(data_[r], Rational(1), SparseVector{{c, value}});
}

void SparseMatrix::append_row(SparseVector row)
{
	if (!row.empty() && row.rbegin()->first >= cols_)
		throw std::out_of_range("appended row exceeds column count");
	std::erase_if(row, [](const auto &kv) { return kv.second.is_zero(); });
	data_.push_back(std::move(row));
}

SparseMatrix SparseMatrix::transpose() const
{
	SparseMatrix t(cols_, rows());
	for (std::size_t r = 0; r < rows(); ++r)
		for (const auto &[c, v] : data_[r])
			t.data_[c].emplace(r, v);
	return t;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, BigInt>>;

// Scales a rational row to a primitive integer row with the same span.
IntRow primitive_integer_row(const SparseVector &row)
{
	BigInt lcm_den = 1;
	for (const auto &[c, v] : row)
		mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.raw().get_den_mpz_t());
	IntRow out;
	out.reserve(row.size());
	BigInt content = 0;
	for (const auto &[c, v] : row) {
		BigInt x = v.raw().get_num() * (lcm_den / v.raw().get_den());
		mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
		out.emplace_back(c, std::move(x));
	}
	if (content > 1)
		for (auto &e : out)
			mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
	return out;
}

void make_primitive(IntRow &row)
{
	BigInt content = 0;
	for (const auto &e : row) {
		mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.second.get_mpz_t());
		if (content == 1)
			return;
	}
	if (content > 1)
		for (auto &e : row)
			mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
}

const BigInt &entry_at(const IntRow &row, std::size_t col)
{
	auto it = std::lower_bound(row.begin(), row.end(), col,
	                           [](const auto &e, std::size_t c) { return e.first < c; });
	return it->second;
}

// Returns (p/g) * target - (a/g) * pivot, which clears column `col`.
IntRow eliminate(const IntRow &target, const IntRow &pivot, std::size_t col)
{
	BigInt a = entry_at(target, col);
	BigInt p = entry_at(pivot, col);
	BigInt g;
	mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
	a /= g;
	p /= g;

	IntRow out;
	out.reserve(target.size() + pivot.size());
	auto t = target.begin();
	auto q = pivot.begin();
	BigInt x;
	while (t != target.end() || q != pivot.end()) {
		if (q == pivot.end() || (t != target.end() && t->first < q->first)) {
			out.emplace_back(t->first, p * t->second);
			++t;
		} else if (t == target.end() || q->first < t->first) {
			out.emplace_back(q->first, -a * q->second);
			++q;
		} else {
			x = p * t->second - a * q->second;
			if (x != 0)
				out.emplace_back(t->first, x);
			++t;
			++q;
		}
	}
	make_primitive(out);
	return out;
}

// Sparse fraction-free elimination. Pivots are chosen to limit fill: the
// active row with fewest nonzeros, then its column shared by fewest active
// rows (ties broken by smallest magnitude, then index). The pivot choice
// affects only cost, never the count of pivots found.
std::size_t eliminate_rank(std::vector<IntRow> rows, std::size_t cols)
{
	std::vector<std::set<std::size_t>> col_rows(cols);
	std::set<std::pair<std::size_t, std::size_t>> by_weight;

	auto attach = [&](std::size_t r) {
		by_weight.emplace(rows[r].size(), r);
		for (const auto &e : rows[r])
			col_rows[e.first].insert(r);
	};
	auto detach = [&](std::size_t r) {
		by_weight.erase({rows[r].size(), r});
		for (const auto &e : rows[r])
			col_rows[e.first].erase(r);
	};

	for (std::size_t r = 0; r < rows.size(); ++r)
		if (!rows[r].empty())
			attach(r);

	std::size_t found = 0;
	while (!by_weight.empty()) {
		std::size_t pr = by_weight.begin()->second;
		detach(pr);
		++found;

		const IntRow &prow = rows[pr];
		std::size_t pcol = prow.front().first;
		const BigInt *pval = &prow.front().second;
		for (const auto &e : prow) {
			std::size_t here = col_rows[e.first].size(), best = col_rows[pcol].size();
			if (here < best ||
			    (here == best && mpz_cmpabs(e.second.get_mpz_t(), pval->get_mpz_t()) < 0)) {
				pcol = e.first;
				pval = &e.second;
			}
		}

		std::vector<std::size_t> targets(col_rows[pcol].begin(), col_rows[pcol].end());
		for (std::size_t r : targets) {
			detach(r);
			rows[r] = eliminate(rows[r], prow, pcol);
			if (!rows[r].empty())
				attach(r);
		}
		rows[pr].clear();
	}
	return found;
}

} // namespace

std::size_t rank(const SparseMatrix &m)
{
	// Long rows fill in faster, so eliminate along the longer dimension.
	const SparseMatrix *src = &m;
	SparseMatrix t;
	if (m.cols() > m.rows()) {
		t = m.transpose();
		src = &t;
	}
	std::vector<IntRow> rows;
	rows.reserve(src->rows());
	for (std::size_t r = 0; r < src->rows(); ++r)
		rows.push_back(primitive_integer_row(src->row(r)));
	return eliminate_rank(std::move(rows), src->cols());
}

std::size_t nullity(const SparseMatrix &m)
{
	return m.cols() - rank(m);
}

SparseMatrix multiply(const SparseMatrix &a, const SparseMatrix &b)
{
	if (a.cols() != b.rows())
		throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
		                        std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
		                        std::to_string(b.cols()));
	SparseMatrix out(0, b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i) {
		SparseVector acc;
		for (const auto &[k, v] : a.row(i))
			axpy(acc, v, b.row(k));
		out.append_row(std::move(acc));
	}
	return out;
}

SparseMatrix row_space_canonical(const SparseMatrix &m)
{
	// pivot column -> row with a leading 1 there and zeros at every other pivot
	std::map<std::size_t, SparseVector> basis;
	for (std::size_t r = 0; r < m.rows(); ++r) {
		SparseVector w = m.row(r);
		std::vector<std::size_t> hits;
		for (const auto &[c, v] : w)
			if (basis.count(c))
				hits.push_back(c);
		for (std::size_t p : hits) {
			auto it = w.find(p);
			if (it != w.end())
				axpy(w, -it->second, basis[p]);
		}
		if (w.empty())
			continue;

		std::size_t lead = w.begin()->first;
		Rational inv = Rational(1) / w.begin()->second;
		for (auto &[c, v] : w)
			v *= inv;
		for (auto &[p, b] : basis) {
			auto it = b.find(lead);
			if (it != b.end())
				axpy(b, -Rational(it->second), w);
		}
		basis.emplace(lead, std::move(w));
	}

	SparseMatrix out(0, m.cols());
	for (auto &[p, b] : basis)
		out.append_row(std::move(b));
	return out;
}

std::string to_string(const SparseMatrix &m)
{
	std::ostringstream os;
	for (std::size_t r = 0; r < m.rows(); ++r) {
		os << '[';
		for (std::size_t c = 0; c < m.cols(); ++c)
			os << (c ? " " : "") << m.get(r, c);
		os << "]\n";
	}
	return os.str();
}

} // namespace schur
