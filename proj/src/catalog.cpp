#include "schur/catalog.hpp"

#include "schur/free_lie.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace schur {

LieAlgebra abelian(std::size_t n)
{
	return LieAlgebra(n);
}

LieAlgebra heisenberg(std::size_t k)
{
	if (k == 0)
		throw std::invalid_argument("heisenberg: k must be positive");
	LieAlgebra algebra(2 * k + 1);
	for (std::size_t i = 0; i < k; ++i)
		algebra.set_bracket(2 * i, 2 * i + 1, basis_vector(2 * k));
	return algebra;
}

LieAlgebra filiform(std::size_t m)
{
	if (m < 3)
		throw std::invalid_argument("filiform: dimension must be at least 3");
	LieAlgebra algebra(m);
	for (std::size_t i = 1; i + 1 < m; ++i)
		algebra.set_bracket(0, i, basis_vector(i + 1));
	return algebra;
}

namespace {

long parse_long(std::string_view s, const std::string &context)
{
	long value = 0;
	auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
	if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
		throw std::invalid_argument("bad integer '" + std::string(s) + "' in " + context);
	return value;
}

std::vector<long> parse_params(std::string_view s, const std::string &context)
{
	std::vector<long> out;
	if (s.empty())
		return out;
	std::size_t start = 0;
	for (;;) {
		std::size_t comma = s.find(',', start);
		out.push_back(parse_long(s.substr(start, comma - start), context));
		if (comma == std::string_view::npos)
			return out;
		start = comma + 1;
	}
}

std::size_t positive(long value, const char *what)
{
	if (value < 1)
		throw std::invalid_argument(std::string(what) + " must be positive, got " +
		                            std::to_string(value));
	return static_cast<std::size_t>(value);
}

} // namespace

BuiltinSpec parse_builtin_spec(std::string_view text)
{
	std::size_t colon = text.find(':');
	if (colon == std::string_view::npos || colon == 0)
		throw std::invalid_argument("builtin spec must look like family:params, got '" +
		                            std::string(text) + "'");
	return {std::string(text.substr(0, colon)),
	        parse_params(text.substr(colon + 1), "builtin spec '" + std::string(text) + "'")};
}

std::string to_string(const BuiltinSpec &spec)
{
	std::string out = spec.family + ":";
	for (std::size_t i = 0; i < spec.params.size(); ++i)
		out += (i ? "," : "") + std::to_string(spec.params[i]);
	return out;
}

LieAlgebra builtin(const std::string &family, const std::vector<long> &params)
{
	auto expect = [&](std::size_t count) {
		if (params.size() != count)
			throw std::invalid_argument(family + " takes " + std::to_string(count) +
			                            " parameter(s), got " + std::to_string(params.size()));
	};
	if (family == "abelian") {
		expect(1);
		return abelian(positive(params[0], "abelian dimension"));
	}
	if (family == "heisenberg") {
		expect(1);
		return heisenberg(positive(params[0], "heisenberg k"));
	}
	if (family == "filiform") {
		expect(1);
		return filiform(positive(params[0], "filiform dimension"));
	}
	if (family == "free" || family == "free_nilpotent") {
		expect(2);
		return free_nilpotent(positive(params[0], "generator count"),
		                      positive(params[1], "class"));
	}
	throw std::invalid_argument("unknown builtin family '" + family + "'");
}

std::vector<CatalogEntry> standard_catalog()
{
	std::vector<CatalogEntry> out;
	for (long n = 1; n <= 6; ++n)
		out.push_back({{"abelian", {n}}, std::nullopt});
	for (long k = 1; k <= 3; ++k)
		out.push_back({{"heisenberg", {k}}, std::nullopt});
	for (long m = 4; m <= 7; ++m)
		out.push_back({{"filiform", {m}}, std::nullopt});
	for (long c = 1; c <= 5; ++c)
		out.push_back({{"free", {2, c}}, std::nullopt});
	for (long c = 1; c <= 3; ++c)
		out.push_back({{"free", {3, c}}, std::nullopt});
	return out;
}

std::vector<CatalogEntry> parse_golden_table(std::string_view text)
{
	std::vector<CatalogEntry> out;
	std::istringstream in{std::string(text)};
	std::string line;
	std::size_t lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		std::istringstream fields(line);
		std::string family, params, source;
		std::size_t dim, cls, gens, mult;
		if (!(fields >> family))
			continue;
		if (!(fields >> params >> dim >> cls >> gens >> mult >> source))
			throw std::invalid_argument("golden table line " + std::to_string(lineno) +
			                            ": expected 7 fields");
		std::string context = "golden table line " + std::to_string(lineno);
		out.push_back({{family, parse_params(params, context)},
		               ExpectedInvariants{dim, cls, gens, mult, source}});
	}
	return out;
}

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string &what)
    : std::runtime_error(what), kind(kind), line(line), column(column)
{
}

std::string to_string(ParseError::Kind kind)
{
	switch (kind) {
	case ParseError::Kind::syntax:
		return "syntax error";
	case ParseError::Kind::index_out_of_range:
		return "index out of range";
	case ParseError::Kind::duplicate_bracket:
		return "duplicate bracket";
	case ParseError::Kind::orientation:
		return "bracket orientation";
	case ParseError::Kind::labels:
		return "bad labels";
	case ParseError::Kind::jacobi:
		return "invalid Lie algebra";
	}
	return "parse error";
}

namespace {

struct Token {
	enum class Type { word, number, plus, minus, star, arrow, end } type;
	std::string text;
	std::size_t column; // 1-based
};

// Splits one comment-free line into tokens. Numbers may carry a "/q" part.
std::vector<Token> tokenize(std::string_view line, std::size_t lineno)
{
	std::vector<Token> out;
	std::size_t i = 0;
	while (i < line.size()) {
		char ch = line[i];
		std::size_t col = i + 1;
		if (std::isspace(static_cast<unsigned char>(ch))) {
			++i;
		} else if (ch == '-' && i + 1 < line.size() && line[i + 1] == '>') {
			out.push_back({Token::Type::arrow, "->", col});
			i += 2;
		} else if (ch == '+' || ch == '-' || ch == '*') {
			auto type = ch == '+' ? Token::Type::plus : ch == '-' ? Token::Type::minus : Token::Type::star;
			out.push_back({type, std::string(1, ch), col});
			++i;
		} else if (std::isdigit(static_cast<unsigned char>(ch))) {
			std::size_t j = i;
			while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
				++j;
			if (j < line.size() && line[j] == '/') {
				++j;
				std::size_t den = j;
				while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
					++j;
				if (j == den)
					throw ParseError(ParseError::Kind::syntax, lineno, j + 1,
					                 "missing denominator after '/'");
			}
			out.push_back({Token::Type::number, std::string(line.substr(i, j - i)), col});
			i = j;
		} else {
			std::size_t j = i;
			while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
				++j;
			out.push_back({Token::Type::word, std::string(line.substr(i, j - i)), col});
			i = j;
		}
	}
	out.push_back({Token::Type::end, "", line.size() + 1});
	return out;
}

class LineParser {
public:
	LineParser(std::vector<Token> tokens, std::size_t lineno) : toks_(std::move(tokens)), line_(lineno) {}

	const Token &peek() const { return toks_[pos_]; }
	const Token &next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

	[[noreturn]] void fail(const Token &at, const std::string &what) const
	{
		throw ParseError(ParseError::Kind::syntax, line_, at.column, what);
	}

	const Token &expect(Token::Type type, const std::string &what)
	{
		const Token &t = next();
		if (t.type != type)
			fail(t, "expected " + what + (t.type == Token::Type::end ? " before end of line"
			                                                         : ", found '" + t.text + "'"));
		return t;
	}

	std::size_t index(const std::string &what)
	{
		const Token &t = expect(Token::Type::number, what);
		if (t.text.find('/') != std::string::npos)
			fail(t, what + " must be an integer");
		return static_cast<std::size_t>(std::stoull(t.text));
	}

	std::size_t line() const { return line_; }

private:
	std::vector<Token> toks_;
	std::size_t pos_ = 0;
	std::size_t line_;
};

} // namespace

LieAlgebra parse_algebra(std::string_view text)
{
	std::optional<LieAlgebra> algebra;
	std::set<std::pair<std::size_t, std::size_t>> seen;
	bool any_bracket = false;
	bool labels_seen = false;

	std::size_t lineno = 0;
	std::size_t start = 0;
	while (start <= text.size()) {
		std::size_t end = text.find('\n', start);
		std::string_view raw = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
		start = end == std::string_view::npos ? text.size() + 1 : end + 1;
		++lineno;
		if (!raw.empty() && raw.back() == '\r')
			raw.remove_suffix(1);
		if (auto hash = raw.find('#'); hash != std::string_view::npos)
			raw = raw.substr(0, hash);

		LineParser p(tokenize(raw, lineno), lineno);
		if (p.peek().type == Token::Type::end)
			continue;
		const Token keyword = p.expect(Token::Type::word, "a keyword");

		if (!algebra) {
			if (keyword.text != "dim")
				p.fail(keyword, "file must start with 'dim N'");
			std::size_t n = p.index("dimension");
			p.expect(Token::Type::end, "end of line after dimension");
			algebra.emplace(n);
			continue;
		}

		if (keyword.text == "labels") {
			if (any_bracket || labels_seen)
				throw ParseError(ParseError::Kind::labels, lineno, keyword.column,
				                 "labels must appear once, directly after 'dim'");
			labels_seen = true;
			std::vector<std::string> labels;
			std::istringstream words{std::string(raw)};
			std::string word;
			words >> word;
			while (words >> word)
				labels.push_back(word);
			if (labels.size() != algebra->dim())
				throw ParseError(ParseError::Kind::labels, lineno, keyword.column,
				                 "expected " + std::to_string(algebra->dim()) + " labels, got " +
				                     std::to_string(labels.size()));
			algebra.emplace(algebra->dim(), std::move(labels));
			continue;
		}
		if (keyword.text != "bracket")
			p.fail(keyword, "unknown keyword '" + keyword.text + "'");

		any_bracket = true;
		const std::size_t n = algebra->dim();
		const Token &ti = p.peek();
		std::size_t i = p.index("first bracket index");
		const Token &tj = p.peek();
		std::size_t j = p.index("second bracket index");
		p.expect(Token::Type::arrow, "'->'");

		SparseVector value;
		std::vector<std::pair<std::size_t, std::size_t>> targets; // (index, column)
		bool first = true;
		while (first || p.peek().type != Token::Type::end) {
			bool negative = false;
			if (!first) {
				const Token &op = p.next();
				if (op.type == Token::Type::minus)
					negative = true;
				else if (op.type != Token::Type::plus)
					p.fail(op, "expected '+' or '-' between terms");
			}
			while (p.peek().type == Token::Type::minus || p.peek().type == Token::Type::plus)
				negative ^= p.next().type == Token::Type::minus;
			const Token &coef = p.expect(Token::Type::number, "a coefficient");
			Rational c;
			try {
				c = Rational::parse(coef.text);
			} catch (const std::invalid_argument &e) {
				p.fail(coef, e.what());
			}
			p.expect(Token::Type::star, "'*'");
			std::size_t col = p.peek().column;
			std::size_t k = p.index("target index");
			targets.emplace_back(k, col);
			axpy(value, negative ? -c : c, SparseVector{{k, Rational(1)}});
			first = false;
		}

		if (i < 1 || i > n)
			throw ParseError(ParseError::Kind::index_out_of_range, lineno, ti.column,
			                 "bracket index " + std::to_string(i) + " outside 1.." + std::to_string(n));
		if (j < 1 || j > n)
			throw ParseError(ParseError::Kind::index_out_of_range, lineno, tj.column,
			                 "bracket index " + std::to_string(j) + " outside 1.." + std::to_string(n));
		for (auto [k, col] : targets)
			if (k < 1 || k > n)
				throw ParseError(ParseError::Kind::index_out_of_range, lineno, col,
				                 "target index " + std::to_string(k) + " outside 1.." + std::to_string(n));
		if (i >= j)
			throw ParseError(ParseError::Kind::orientation, lineno, ti.column,
			                 "bracket " + std::to_string(i) + " " + std::to_string(j) +
			                     " must be written with i < j");
		if (!seen.emplace(i, j).second)
			throw ParseError(ParseError::Kind::duplicate_bracket, lineno, ti.column,
			                 "bracket " + std::to_string(i) + " " + std::to_string(j) + " given twice");

		SparseVector shifted;
		for (auto &[k, c] : value)
			shifted.emplace(k - 1, c);
		algebra->set_bracket(i - 1, j - 1, std::move(shifted));
	}

	if (!algebra)
		throw ParseError(ParseError::Kind::syntax, lineno, 0, "missing 'dim N' line");
	if (auto v = validate(*algebra); !v)
		throw ParseError(ParseError::Kind::jacobi, 0, 0, v.message());
	return std::move(*algebra);
}

std::string serialize(const LieAlgebra &algebra)
{
	std::ostringstream os;
	os << "dim " << algebra.dim() << '\n';
	if (algebra.labels() != default_labels(algebra.dim())) {
		os << "labels";
		for (const auto &l : algebra.labels())
			os << ' ' << l;
		os << '\n';
	}
	for (const auto &[ij, value] : algebra.structure()) {
		os << "bracket " << ij.first + 1 << ' ' << ij.second + 1 << " ->";
		bool first = true;
		for (const auto &[k, c] : value) {
			if (first)
				os << ' ' << c;
			else if (c.sign() < 0)
				os << " - " << -c;
			else
				os << " + " << c;
			os << '*' << k + 1;
			first = false;
		}
		os << '\n';
	}
	return os.str();
}

} // namespace schur
