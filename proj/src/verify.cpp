#include "schur/verify.hpp"

#include "schur/bounds.hpp"
#include "schur/catalog.hpp"
#include "schur/free_lie.hpp"
#include "schur/multiplier.hpp"
#include "schur/witt.hpp"

#include <exception>

namespace schur {

namespace {

struct Subject {
	std::string name;
	LieAlgebra algebra;
	bool free = false;
	std::size_t n = 0, c = 0;
};

CheckResult check(std::string name, std::string statement)
{
	CheckResult r;
	r.name = std::move(name);
	r.statement = std::move(statement);
	return r;
}

std::string str(const BigInt &x)
{
	return x.get_str();
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions &options)
{
	CheckResult witt = check("witt-necklace", "sum over m | d of m * l_n(m) equals n^d");
	CheckResult hall = check("hall-counts", "Hall basis has l_n(d) trees in degree d");
	CheckResult jacobi = check("jacobi", "every algebra satisfies the Jacobi identity");
	CheckResult shape = check("class-generators", "F/F^{c+1} has class c and n generators");
	CheckResult chain = check("chain-complex", "boundary_2 * boundary_3 = 0");
	CheckResult oracle = check("oracle-equivalence", "dim M(F/F^{c+1}) = l_n(c+1) (homology vs free presentation)");
	CheckResult nontrivial = check("nontriviality", "nilpotent L with dim L > 1 has M(L) != 0");
	CheckResult sound = check("bound-soundness", "dim M(L) <= class/generator bound, <= n(n-1)/2 - dim L^2, <= n(n-1)/2");
	CheckResult induct = check("inductive-bound", "class/generator bound of L = bound of L/L^c + l_n(c+1)");
	CheckResult euler = check("euler-identity", "alternating dimension sum of M(L) -> M(L/L^c) -> L^c sequence vanishes");

	for (std::size_t n = 1; n <= options.max_n; ++n) {
		++witt.cases;
		if (!witt_table(n, options.max_class + 1).satisfies_necklace_identity())
			witt.failures.push_back("n = " + std::to_string(n));
	}

	std::vector<Subject> subjects;
	for (const auto &entry : standard_catalog())
		if (entry.spec.family != "free")
			subjects.push_back({to_string(entry.spec), builtin(entry.spec)});
	for (std::size_t n = 2; n <= options.max_n; ++n) {
		HallBasis basis(n, options.max_class);
		auto counts = basis.degree_counts();
		for (std::size_t d = 1; d <= options.max_class; ++d) {
			++hall.cases;
			if (witt_dimension(n, d) != static_cast<unsigned long>(counts[d - 1]))
				hall.failures.push_back("n = " + std::to_string(n) + ", degree " + std::to_string(d) +
				                        ": " + std::to_string(counts[d - 1]) + " trees");
		}
		for (std::size_t c = 1; c <= options.max_class; ++c)
			subjects.push_back({"free:" + std::to_string(n) + "," + std::to_string(c),
			                    free_nilpotent(n, c), true, n, c});
	}
	if (options.tamper)
		for (auto &s : subjects)
			options.tamper(s.name, s.algebra);

	for (const auto &s : subjects) {
		const LieAlgebra &L = s.algebra;
		++jacobi.cases;
		if (auto v = validate(L); !v) {
			jacobi.failures.push_back(s.name + ": " + v.message());
			continue;
		}
		if (!is_nilpotent(L)) {
			nontrivial.failures.push_back(s.name + ": not nilpotent");
			continue;
		}
		const std::size_t cls = nilpotency_class(L);
		const std::size_t gens = min_generators(L);
		if (s.free) {
			++shape.cases;
			if (cls != s.c || gens != s.n)
				shape.failures.push_back(s.name + ": class " + std::to_string(cls) + ", generators " +
				                         std::to_string(gens));
		}

		if (L.dim() > options.max_homology_dim) {
			for (auto *check : {&chain, &oracle, &nontrivial, &sound})
				++check->skipped;
		} else {
			++chain.cases;
			if (!multiply(ce_boundary_2(L), ce_boundary_3(L)).is_zero())
				chain.failures.push_back(s.name);

			const std::size_t m = multiplier_dimension(L);
			if (s.free) {
				++oracle.cases;
				BigInt expected = multiplier_of_free_nilpotent(s.n, s.c);
				if (expected != static_cast<unsigned long>(m))
					oracle.failures.push_back(s.name + ": homology " + std::to_string(m) +
					                          ", closed form " + str(expected));
			}

			++nontrivial.cases;
			if (!verify_nontriviality(L).ok())
				nontrivial.failures.push_back(s.name + ": multiplier " + std::to_string(m) +
				                              " at dimension " + std::to_string(L.dim()));

			++sound.cases;
			BoundReport r = compare(L, s.name);
			if (!r.sound())
				sound.failures.push_back(s.name + ": multiplier " + std::to_string(r.multiplier_dim) +
				                         ", bounds " + str(r.bound_new) + "/" +
				                         std::to_string(r.bound_hardy) + "/" +
				                         std::to_string(r.bound_moneyhun));
		}

		if (s.free && cls >= 2) {
			++induct.cases;
			InductiveStep step = inductive_bound_step(L);
			if (!step.ok())
				induct.failures.push_back(s.name + ": " + str(step.bound) + " != " +
				                          str(step.quotient_bound) + " + " + str(step.top_term));
		}
	}

	for (std::size_t n = 2; n <= options.max_n; ++n)
		for (std::size_t c = 2; c <= options.max_class; ++c) {
			++euler.cases;
			EulerCheck e = euler_identity_free_nilpotent(n, c, options.max_homology_dim);
			if (!e.cross_checked())
				++euler.skipped;
			if (!e.ok())
				euler.failures.push_back("n = " + std::to_string(n) + ", c = " + std::to_string(c));
		}

	return {witt, hall, jacobi, shape, chain, oracle, nontrivial, sound, induct, euler};
}

} // namespace schur
