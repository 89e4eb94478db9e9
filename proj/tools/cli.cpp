#include "cli.hpp"

#include "schur/bounds.hpp"
#include "schur/catalog.hpp"
#include "schur/free_lie.hpp"
#include "schur/multiplier.hpp"
#include "schur/witt.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace schur::cli {

namespace {

constexpr std::size_t wedge3_guardrail = 100000;

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Options {
	std::string format = "human";
	bool force = false;

	std::uint64_t witt_n = 0, witt_dmax = 0;

	std::size_t free_n = 0, free_c = 0;
	bool constants = false;

	std::string input_path;
	std::string builtin_spec;
	bool verbose = false;

	std::size_t max_n = 3, max_class = 3;
};

bool machine(const Options &o)
{
	return o.format == "machine";
}

void header(std::ostream &out, const std::vector<std::string> &args)
{
	out << "format " << machine_format_tag << '\n' << "command";
	for (const auto &a : args)
		out << ' ' << a;
	out << '\n';
}

struct Input {
	std::string name;
	LieAlgebra algebra;
};

Input load_input(const Options &o)
{
	if (o.input_path.empty() == o.builtin_spec.empty())
		throw UsageError("give exactly one of an input file or --builtin family:params");
	if (!o.builtin_spec.empty())
		return {o.builtin_spec, builtin(parse_builtin_spec(o.builtin_spec))};
	std::ifstream in(o.input_path, std::ios::binary);
	if (!in)
		throw UsageError("cannot open '" + o.input_path + "'");
	std::ostringstream text;
	text << in.rdbuf();
	try {
		return {o.input_path, parse_algebra(text.str())};
	} catch (const ParseError &e) {
		std::ostringstream msg;
		msg << o.input_path;
		if (e.line)
			msg << ':' << e.line;
		if (e.column)
			msg << ':' << e.column;
		msg << ": " << to_string(e.kind) << ": " << e.what();
		throw UsageError(msg.str());
	}
}

void guard_size(const LieAlgebra &L, const Options &o, std::ostream &err)
{
	std::size_t columns = binomial(L.dim(), 3);
	if (columns > wedge3_guardrail && !o.force) {
		err << "warning: degree-3 boundary has " << columns << " columns (limit "
		    << wedge3_guardrail << "); rerun with --force to proceed\n";
		throw UsageError("refusing a long computation without --force");
	}
}

int cmd_witt(const Options &o, const std::vector<std::string> &args, std::ostream &out)
{
	if (o.witt_n < 1 || o.witt_dmax < 1)
		throw UsageError("witt needs n >= 1 and dmax >= 1");
	WittTable table = witt_table(o.witt_n, o.witt_dmax);
	BigInt cumulative = 0;
	if (machine(o)) {
		header(out, args);
		out << "n " << o.witt_n << '\n';
	} else {
		out << "Free Lie algebra on " << o.witt_n << " generator(s)\n";
		out << std::setw(4) << "d" << std::setw(14) << "l_n(d)" << std::setw(16) << "dim F/F^{d+1}"
		    << '\n';
	}
	for (std::uint64_t d = 1; d <= table.max_degree(); ++d) {
		cumulative += table.at(d);
		if (machine(o))
			out << "row " << d << ' ' << table.at(d) << ' ' << cumulative << '\n';
		else
			out << std::setw(4) << d << std::setw(14) << table.at(d) << std::setw(16) << cumulative
			    << '\n';
	}
	return success;
}

int cmd_free(const Options &o, const std::vector<std::string> &args, std::ostream &out)
{
	if (o.free_n < 1 || o.free_c < 1)
		throw UsageError("free needs n >= 1 and c >= 1");
	HallBasis basis(o.free_n, o.free_c);
	LieAlgebra L = free_nilpotent(o.free_n, o.free_c);
	auto graded = basis.degree_counts();
	std::size_t cls = nilpotency_class(L);
	std::size_t gens = min_generators(L);

	if (machine(o)) {
		header(out, args);
		out << "dim " << L.dim() << "\ngraded";
		for (auto g : graded)
			out << ' ' << g;
		out << "\nclass " << cls << "\ngenerators " << gens << '\n';
		if (o.constants)
			out << "constants\n" << serialize(L) << "end\n";
		return success;
	}
	out << "dim " << L.dim() << ", graded ";
	for (std::size_t d = 0; d < graded.size(); ++d)
		out << (d ? "+" : "") << graded[d];
	out << ", class " << cls << ", generators " << gens << '\n';
	if (o.constants)
		out << serialize(L);
	return success;
}

int cmd_multiplier(const Options &o, const std::vector<std::string> &args, std::ostream &out,
                   std::ostream &err)
{
	Input in = load_input(o);
	guard_size(in.algebra, o, err);
	MultiplierBreakdown b = multiplier_breakdown(in.algebra);
	if (machine(o)) {
		header(out, args);
		out << "input " << in.name << "\ndim " << in.algebra.dim() << "\nmultiplier "
		    << b.dimension() << '\n';
	} else {
		out << "dim M(L) = " << b.dimension() << '\n';
	}
	if (!o.verbose)
		return success;

	const LieAlgebra &L = in.algebra;
	auto whole = Subspace::whole(L.dim());
	std::size_t derived = product_space(L, whole, whole).dim();
	bool nil = is_nilpotent(L);
	std::string cls = nil && L.dim() ? std::to_string(nilpotency_class(L)) : "-";
	std::string gens = nil ? std::to_string(min_generators(L)) : "-";
	if (machine(o)) {
		out << "nullity_d2 " << b.cycles << "\nrank_d3 " << b.boundaries << "\ndim_derived "
		    << derived << "\nnilpotent " << (nil ? "true" : "false") << "\nclass " << cls
		    << "\ngenerators " << gens << '\n';
	} else {
		out << "  dim L          " << L.dim() << "\n  nullity(d2)    " << b.cycles
		    << "\n  rank(d3)       " << b.boundaries << "\n  dim L^2        " << derived
		    << "\n  class          " << (nil ? cls : "not nilpotent") << "\n  generators     "
		    << gens << '\n';
	}
	return success;
}

int cmd_report(const Options &o, const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err)
{
	Input in = load_input(o);
	if (in.algebra.dim() == 0)
		throw UsageError("report needs an algebra of dimension >= 1");
	guard_size(in.algebra, o, err);
	BoundReport r = compare(in.algebra, in.name);
	if (machine(o)) {
		header(out, args);
		out << "algebra_name " << r.algebra_name << "\ndim " << r.dim << "\nclass_c " << r.class_c
		    << "\ngenerators_n " << r.generators_n << "\ndim_derived " << r.dim_derived
		    << "\nmultiplier_dim " << r.multiplier_dim << "\nbound_new " << r.bound_new
		    << "\nbound_hardy " << r.bound_hardy << "\nbound_moneyhun " << r.bound_moneyhun
		    << "\nwinner " << to_string(r.winner) << "\nnontrivial_ok "
		    << (r.nontrivial_ok ? "true" : "false") << '\n';
	} else {
		auto row = [&](const std::string &label, const auto &value) {
			out << "  " << std::left << std::setw(42) << label << value << '\n';
		};
		out << "Schur multiplier report: " << r.algebra_name << '\n';
		row("dim L", r.dim);
		row("class c", r.class_c);
		row("generators n = dim L/L^2", r.generators_n);
		row("dim L^2", r.dim_derived);
		row("dim M(L)", r.multiplier_dim);
		row("bound sum_{j=1}^c l_n(j+1)", r.bound_new);
		row("bound dim(dim-1)/2 - dim L^2", r.bound_hardy);
		row("bound dim(dim-1)/2", r.bound_moneyhun);
		row("sharper bound", to_string(r.winner));
		row("M(L) != 0 when dim L > 1", r.nontrivial_ok ? "ok" : "VIOLATED");
	}
	return r.sound() ? success : failure;
}

int cmd_verify(const Options &o, const std::vector<std::string> &args, std::ostream &out,
               const Hooks &hooks)
{
	if (o.max_n < 1 || o.max_class < 1)
		throw UsageError("verify needs --max-n >= 1 and --max-class >= 1");
	VerifyOptions vo;
	vo.max_n = o.max_n;
	vo.max_class = o.max_class;
	vo.tamper = hooks.tamper;
	auto results = run_verification(vo);

	std::size_t failed = 0;
	if (machine(o))
		header(out, args);
	for (const auto &r : results) {
		failed += !r.passed();
		if (machine(o)) {
			out << "check " << r.name << ' ' << (r.passed() ? "pass" : "fail") << ' ' << r.cases
			    << ' ' << r.skipped << '\n';
			for (const auto &f : r.failures)
				out << "failure " << r.name << ' ' << f << '\n';
			continue;
		}
		out << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.name
		    << std::setw(12) << (std::to_string(r.cases) + " cases") << r.statement;
		if (r.skipped)
			out << " [" << r.skipped << " skipped: dim > 35]";
		out << '\n';
		for (const auto &f : r.failures)
			out << "     violated by " << f << '\n';
	}
	if (machine(o))
		out << "result " << (failed ? "fail" : "pass") << '\n';
	else if (failed)
		out << failed << " of " << results.size() << " checks failed\n";
	else
		out << "all " << results.size() << " checks passed\n";
	return failed ? failure : success;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const Hooks &hooks)
{
	Options o;
	CLI::App app{"Exact Schur multipliers of nilpotent Lie algebras", "schur"};
	app.fallthrough();
	app.require_subcommand(1);
	app.add_option("--format", o.format, "Output format")
	    ->check(CLI::IsMember({"human", "machine"}))
	    ->default_val("human");
	app.add_flag("--force", o.force, "Allow very large homology computations");

	auto *witt = app.add_subcommand("witt", "Tabulate l_n(d) for d = 1..dmax");
	witt->add_option("n", o.witt_n, "Generator count")->required();
	witt->add_option("dmax", o.witt_dmax, "Largest degree")->required();

	auto *free = app.add_subcommand("free", "Build the free nilpotent algebra F/F^{c+1}");
	free->add_option("n", o.free_n, "Generator count")->required();
	free->add_option("c", o.free_c, "Nilpotency class")->required();
	free->add_flag("--constants", o.constants, "Print the structure-constant file");

	auto add_input = [&](CLI::App *cmd) {
		cmd->add_option("input", o.input_path, "Structure-constant file");
		cmd->add_option("--builtin", o.builtin_spec,
		                "Builtin algebra: abelian:N, heisenberg:K, free:N,C, filiform:M");
	};
	auto *mult = app.add_subcommand("multiplier", "Compute dim M(L)");
	add_input(mult);
	mult->add_flag("--verbose", o.verbose, "Show homology details");

	auto *report = app.add_subcommand("report", "Compare dim M(L) with its upper bounds");
	add_input(report);

	auto *verify = app.add_subcommand("verify", "Run the identity and bound checks over the catalog");
	verify->add_option("--max-n", o.max_n, "Largest generator count for free algebras");
	verify->add_option("--max-class", o.max_class, "Largest class for free algebras");

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return success;
	} catch (const CLI::ParseError &e) {
		err << "error: " << e.what() << '\n';
		return usage_error;
	}

	try {
		if (app.got_subcommand(witt))
			return cmd_witt(o, args, out);
		if (app.got_subcommand(free))
			return cmd_free(o, args, out);
		if (app.got_subcommand(mult))
			return cmd_multiplier(o, args, out, err);
		if (app.got_subcommand(report))
			return cmd_report(o, args, out, err);
		if (app.got_subcommand(verify))
			return cmd_verify(o, args, out, hooks);
	} catch (const UsageError &e) {
		err << "error: " << e.what() << '\n';
		return usage_error;
	} catch (const NotNilpotent &e) {
		err << "error: algebra is not nilpotent: " << e.what() << '\n';
		return failure;
	} catch (const ParseError &e) {
		err << "error: " << to_string(e.kind) << ": " << e.what() << '\n';
		return usage_error;
	} catch (const std::invalid_argument &e) {
		err << "error: " << e.what() << '\n';
		return usage_error;
	} catch (const std::exception &e) {
		err << "error: " << e.what() << '\n';
		return failure;
	}
	return usage_error;
}

} // namespace schur::cli
