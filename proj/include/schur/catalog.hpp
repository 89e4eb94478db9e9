#pragma once

#include "schur/lie_algebra.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schur {

LieAlgebra abelian(std::size_t n);
// Dimension 2k+1 with [e_{2i-1}, e_{2i}] = e_{2k+1}.
LieAlgebra heisenberg(std::size_t k);
// Dimension m with [e_1, e_i] = e_{i+1} for 2 <= i < m. Requires m >= 3.
LieAlgebra filiform(std::size_t m);

struct BuiltinSpec {
	std::string family;
	std::vector<long> params;
};

// "family:p1,p2,..." e.g. "free:2,3". Throws std::invalid_argument.
BuiltinSpec parse_builtin_spec(std::string_view text);
std::string to_string(const BuiltinSpec &spec);

// Families: abelian(n), heisenberg(k), free(n, c) (alias free_nilpotent),
// filiform(m). Throws std::invalid_argument for an unknown family or bad
// parameters.
LieAlgebra builtin(const std::string &family, const std::vector<long> &params);
inline LieAlgebra builtin(const BuiltinSpec &spec) { return builtin(spec.family, spec.params); }

struct ExpectedInvariants {
	std::size_t dim = 0;
	std::size_t nilpotency_class = 0;
	std::size_t generators = 0;
	std::size_t multiplier = 0;
	std::string source; // how the numbers were obtained
};

struct CatalogEntry {
	BuiltinSpec spec;
	std::optional<ExpectedInvariants> expected;
};

// abelian 1..6, heisenberg 1..3, filiform 4..7, and free nilpotent algebras
// on 2 generators of class 1..5 and on 3 generators of class 1..3.
std::vector<CatalogEntry> standard_catalog();

// Reads a golden table: one entry per line,
//   family params dim class generators multiplier source
// with params comma-separated and '#' comments.
std::vector<CatalogEntry> parse_golden_table(std::string_view text);

struct ParseError : std::runtime_error {
	enum class Kind { syntax, index_out_of_range, duplicate_bracket, orientation, labels, jacobi };

	ParseError(Kind kind, std::size_t line, std::size_t column, const std::string &what);

	Kind kind;
	std::size_t line;   // 1-based; 0 when the error concerns the whole file
	std::size_t column; // 1-based; 0 when not applicable
};

std::string to_string(ParseError::Kind kind);

// Structure-constant text format:
//   dim N
//   labels a b c ...            (optional, N names)
//   bracket i j -> c1*k1 + c2*k2 ...
// Indices are 1-based with i < j; coefficients are integers or p/q; '#'
// starts a comment. The result is checked against the Jacobi identity.
LieAlgebra parse_algebra(std::string_view text);

// Canonical text: brackets sorted by (i, j), terms by k; labels line only
// when labels differ from e1..eN.
std::string serialize(const LieAlgebra &algebra);

} // namespace schur
