#pragma once

#include <string>
#include <vector>

namespace powerlambda::cli {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> lines;
};

/// Catalog groups of order at most 12 (cyclic, dihedral, quaternion,
/// elementary abelian, small alternating/symmetric and cyclic products).
const std::vector<std::string>& small_roster();

/// Non-abelian simple groups of the catalog.
const std::vector<std::string>& simple_roster();

SuiteResult check_lemma21();
SuiteResult check_prop22();
SuiteResult check_thm23();
SuiteResult check_thm24();
SuiteResult check_thm11();

/// Suite names accepted by run_suite, in `check all` order.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name);

} // namespace powerlambda::cli
