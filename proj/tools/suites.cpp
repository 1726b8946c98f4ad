#include "suites.hpp"

#include <sstream>
#include <stdexcept>

#include "powerlambda/arith.hpp"
#include "powerlambda/catalog.hpp"
#include "powerlambda/hampath.hpp"
#include "powerlambda/labelling.hpp"
#include "powerlambda/powergraph.hpp"
#include "powerlambda/spectrum.hpp"

namespace powerlambda::cli {

namespace {

// Groups of non-prime-power order up to 360 used by the same-length suite.
const std::vector<std::string> kMixedRoster = {
    "C6", "C10", "C12", "C30", "D3", "D5", "D6", "D15", "Q3", "Q15", "A4", "S4",
    "A5", "S5", "A6", "PSL2_7", "X(C2,C6)", "X(C3,C6)", "X(C6,C6)", "X(C2,A4)",
};

// Simple groups with more than one stratum.
const std::vector<std::string> kLayeredSimpleRoster = {
    "PSL2_7", "A6", "PSL2_11", "PSL2_13", "A7",
};

// x is a positive power of y, by walking the powers of y.
bool is_power_of(const FiniteGroup& group, ElementId x, ElementId y)
{
    ElementId p = y;
    for (std::uint64_t m = 1; m <= group.element_order(y); ++m) {
        if (p == x) {
            return true;
        }
        p = group.multiply(p, y);
    }
    return false;
}

bool power_related(const FiniteGroup& group, ElementId x, ElementId y)
{
    return is_power_of(group, x, y) || is_power_of(group, y, x);
}

int order_length(const PrimeBasis& basis, std::uint64_t d)
{
    return length(partial_vector(d, basis));
}

} // namespace

const std::vector<std::string>& small_roster()
{
    static const std::vector<std::string> roster = {
        "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
        "D3", "D4", "D5", "D6", "Q2", "Q3", "E2_2", "E3_2", "E2_3",
        "S3", "A3", "A4",
        "X(C2,C2)", "X(C2,C3)", "X(C2,C4)", "X(C2,C5)", "X(C2,C6)", "X(C3,C3)",
        "X(C3,C4)", "X(C2,X(C2,C2))", "X(C2,X(C2,C3))",
    };
    return roster;
}

const std::vector<std::string>& simple_roster()
{
    static const std::vector<std::string> roster = {
        "A5", "A6", "A7", "PSL2_5", "PSL2_7", "PSL2_11", "PSL2_13",
    };
    return roster;
}

SuiteResult check_lemma21()
{
    SuiteResult result{"lemma21", true, {}};
    for (const std::string& spec : simple_roster()) {
        const FiniteGroup group = build_group(spec);
        const ClassDecomposition dec = cyclic_classes(group);
        std::ostringstream line;
        bool ok = true;
        line << spec << ":";
        for (const OrderClasses& oc : dec.by_order) {
            line << " m(" << oc.order << ")=" << oc.classes.size();
            ok = ok && oc.classes.size() >= 2;
        }
        line << (ok ? "  ok" : "  FAIL");
        result.passed = result.passed && ok;
        result.lines.push_back(line.str());
    }
    return result;
}

SuiteResult check_prop22()
{
    SuiteResult result{"prop22", true, {}};
    for (const std::string& spec : kMixedRoster) {
        const FiniteGroup group = build_group(spec);
        const PrimeBasis basis = factorize(group.order());
        std::size_t pairs = 0;
        std::size_t violations = 0;
        for (ElementId x = 1; x < group.order(); ++x) {
            const std::uint64_t dx = group.element_order(x);
            for (ElementId y = x + 1; y < group.order(); ++y) {
                const std::uint64_t dy = group.element_order(y);
                if (dx == dy || order_length(basis, dx) != order_length(basis, dy)) {
                    continue;
                }
                ++pairs;
                if (power_related(group, x, y)) {
                    ++violations;
                }
            }
        }
        std::ostringstream line;
        line << spec << ": " << pairs << " same-length cross-order pairs, " << violations
             << " adjacent" << (violations == 0 ? "  ok" : "  FAIL");
        result.passed = result.passed && violations == 0;
        result.lines.push_back(line.str());
    }
    return result;
}

SuiteResult check_thm23()
{
    SuiteResult result{"thm23", true, {}};
    for (const std::string& spec : kLayeredSimpleRoster) {
        const FiniteGroup group = build_group(spec);
        const ClassDecomposition dec = cyclic_classes(group);
        std::size_t checked = 0;
        std::size_t violations = 0;
        for (auto hi = dec.strata.begin(); hi != dec.strata.end(); ++hi) {
            const std::vector<ElementId> upper = stratum(dec, group, hi->first);
            for (auto lo = dec.strata.begin(); lo != hi; ++lo) {
                const std::vector<ElementId> lower = stratum(dec, group, lo->first);
                for (ElementId g1 : upper) {
                    ++checked;
                    bool found = false;
                    for (ElementId g2 : lower) {
                        if (!power_related(group, g1, g2)) {
                            found = true;
                            break;
                        }
                    }
                    violations += found ? 0 : 1;
                }
            }
        }
        std::ostringstream line;
        line << spec << ": " << dec.strata.size() << " strata, " << checked
             << " descents checked, " << violations << " without partner"
             << (violations == 0 ? "  ok" : "  FAIL");
        result.passed = result.passed && violations == 0;
        result.lines.push_back(line.str());
    }
    return result;
}

SuiteResult check_thm24()
{
    SuiteResult result{"thm24", true, {}};
    for (const std::string& spec : small_roster()) {
        const FiniteGroup group = build_group(spec);
        const PowerGraph pg = build_power_graph(group);
        const auto n = static_cast<std::int64_t>(group.order());
        const ExactResult exact = exact_lambda(pg.graph, 2 * (n - 1));
        const SearchResult path = backtracking_hamiltonian(punctured_complement(pg));
        const bool lambda_tight = exact.status == ExactStatus::Exact && exact.lambda == n;
        const bool has_path = path.status == SearchStatus::Found;
        const bool ok = exact.status == ExactStatus::Exact
                        && path.status != SearchStatus::BudgetExceeded
                        && lambda_tight == has_path && exact.lambda >= n;
        std::ostringstream line;
        line << spec << ": |G|=" << n << " lambda=" << exact.lambda
             << " hamiltonian=" << to_string(path.status) << (ok ? "  ok" : "  FAIL");
        result.passed = result.passed && ok;
        result.lines.push_back(line.str());
    }
    return result;
}

SuiteResult check_thm11()
{
    struct Case {
        const char* spec;
        std::int64_t expected;
    };
    static const Case cases[] = {
        {"D3", 6}, {"D4", 8}, {"D5", 10}, {"D6", 12}, {"Q3", 12},
        {"E2_2", 4}, {"E3_2", 9}, {"E2_3", 8},
    };
    SuiteResult result{"thm11", true, {}};
    for (const Case& c : cases) {
        const GroupSpec spec = parse_group_spec(c.spec);
        const FiniteGroup group = build_group(spec);
        const LambdaReport report = lambda_of_group(group, spec);
        const bool ok = report.lambda && *report.lambda == c.expected && report.verified;
        std::ostringstream line;
        line << c.spec << ": lambda=" << (report.lambda ? std::to_string(*report.lambda) : "?")
             << " expected " << c.expected << " (" << to_string(report.method) << ")"
             << (ok ? "  ok" : "  FAIL");
        result.passed = result.passed && ok;
        result.lines.push_back(line.str());
    }
    return result;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"lemma21", "prop22", "thm23", "thm24",
                                                   "thm11"};
    return names;
}

SuiteResult run_suite(const std::string& name)
{
    if (name == "lemma21") {
        return check_lemma21();
    }
    if (name == "prop22") {
        return check_prop22();
    }
    if (name == "thm23") {
        return check_thm23();
    }
    if (name == "thm24") {
        return check_thm24();
    }
    if (name == "thm11") {
        return check_thm11();
    }
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace powerlambda::cli
