#pragma once

#include "schur/lie_algebra.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace schur {

struct VerifyOptions {
	std::size_t max_n = 3;
	std::size_t max_class = 3;
	// Homology is skipped for algebras above this dimension.
	std::size_t max_homology_dim = 35;
	// Applied to every algebra right after construction. Only tests set this,
	// to inject faults.
	std::function<void(const std::string &name, LieAlgebra &)> tamper;
};

struct CheckResult {
	std::string name;
	std::string statement;
	std::size_t cases = 0;
	std::size_t skipped = 0;
	std::vector<std::string> failures;

	bool passed() const { return failures.empty(); }
};

// Runs every check over the fixed catalog plus free nilpotent
// algebras with 2 <= n <= max_n generators and class 1 <= c <= max_class.
std::vector<CheckResult> run_verification(const VerifyOptions &options);

} // namespace schur
