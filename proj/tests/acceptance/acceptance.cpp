// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: powerlambda_acceptance [path-to-powerlambda-cli]

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "powerlambda/arith.hpp"
#include "powerlambda/catalog.hpp"
#include "powerlambda/hampath.hpp"
#include "powerlambda/labelling.hpp"
#include "powerlambda/spectrum.hpp"
#include "support/oracles.hpp"

using namespace powerlambda;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool passed = true;
    std::string detail;
};

// Adjacent pairs (x, x^m) enumerated by repeated multiplication; condition (ii)
// reduces to distinct labels because the identity is adjacent to everything.
bool labelling_valid_by_powers(const FiniteGroup& g, const L21Labelling& lab)
{
    std::vector<std::int64_t> sorted = lab.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    for (ElementId x = 0; x < g.order(); ++x) {
        ElementId p = g.multiply(x, x);
        while (p != x) {
            if (std::abs(lab.labels[x] - lab.labels[p]) < 2) {
                return false;
            }
            p = g.multiply(p, x);
        }
    }
    return true;
}

// Criterion 1: constructive pipeline on simple groups up to order 660.
Outcome main_theorem()
{
    Outcome out;
    const auto total_start = Clock::now();
    std::ostringstream detail;
    for (const char* text : {"A5", "A6", "PSL2_5", "PSL2_7", "PSL2_11"}) {
        const auto start = Clock::now();
        const GroupSpec spec = parse_group_spec(text);
        const FiniteGroup g = build_group(spec);
        const ClassDecomposition dec = cyclic_classes(g);
        const PowerGraph pg = build_power_graph(g);
        const ConstructiveResult built = build_constructive_hamiltonian(g, dec, pg);
        const bool path_ok = !validate_hamiltonian(pg, built.path);
        const L21Labelling lab = labelling_from_path(pg, built.path);
        const auto n = static_cast<std::int64_t>(g.order());
        const bool lab_ok = verify_l21(pg, lab).valid && labelling_valid_by_powers(g, lab)
                            && lab.span() == n;
        const LambdaReport report = lambda_of_group(g, spec);
        const bool report_ok = report.method == LambdaMethod::Constructive && report.lambda == n
                               && report.lower_bound == n && report.verified;
        const double secs = seconds_since(start);
        const bool ok = path_ok && lab_ok && report_ok && secs < 10.0;
        detail << " " << text << "=" << (report.lambda ? *report.lambda : -1) << "/" << n
               << (ok ? "" : "(FAIL)") << " " << secs << "s;";
        out.passed = out.passed && ok;
    }
    const double total = seconds_since(total_start);
    out.passed = out.passed && total < 60.0;
    detail << " total " << total << "s";
    out.detail = detail.str();
    return out;
}

// Criterion 2: exact solver on K_p.
Outcome prime_cyclic()
{
    Outcome out;
    std::ostringstream detail;
    const auto start = Clock::now();
    for (std::int64_t p : {2, 3, 5, 7}) {
        const Graph kp = build_power_graph(build_group("C" + std::to_string(p))).graph;
        if (kp.edge_count() != static_cast<std::size_t>(p * (p - 1) / 2)) {
            out.passed = false;
        }
        const ExactResult r = exact_lambda(kp, 4 * p);
        const bool ok = r.status == ExactStatus::Exact && r.lambda == 2 * (p - 1)
                        && verify_l21(kp, *r.witness).valid;
        detail << " C" << p << "=" << r.lambda;
        out.passed = out.passed && ok;
    }
    const double secs = seconds_since(start);
    out.passed = out.passed && secs < 1.0;
    detail << "; " << secs << "s";
    out.detail = detail.str();
    return out;
}

// Criterion 3: known families by exact search.
Outcome known_families()
{
    struct Case {
        const char* spec;
        std::int64_t expected;
    };
    const Case cases[] = {{"D3", 6},  {"D4", 8},   {"D5", 10}, {"Q3", 12},
                          {"E2_2", 4}, {"E3_2", 9}, {"E2_3", 8}};
    Outcome out;
    std::ostringstream detail;
    const auto start = Clock::now();
    for (const Case& c : cases) {
        const FiniteGroup g = build_group(c.spec);
        const Graph pg = build_power_graph(g).graph;
        const ExactResult r = exact_lambda(pg, 2 * c.expected);
        const bool ok = r.status == ExactStatus::Exact && r.lambda == c.expected
                        && verify_l21(pg, *r.witness).valid;
        detail << " " << c.spec << "=" << r.lambda << (ok ? "" : "(FAIL)");
        out.passed = out.passed && ok;
    }
    const double secs = seconds_since(start);
    out.passed = out.passed && secs < 30.0;
    detail << "; " << secs << "s";
    out.detail = detail.str();
    return out;
}

// Criterion 4: every order of every simple group up to 660 has >= 2 classes;
// counts cross-checked as |elements of order d| / phi(d).
Outcome width_lemma()
{
    Outcome out;
    std::size_t violations = 0;
    std::size_t checked = 0;
    std::ostringstream detail;
    for (const char* text : {"A5", "A6", "A7", "PSL2_5", "PSL2_7", "PSL2_11", "PSL2_13"}) {
        const GroupSpec spec = parse_group_spec(text);
        if (!is_nonabelian_simple(spec) || advertised_order(spec) > 660) {
            continue;
        }
        const FiniteGroup g = build_group(spec);
        const ClassDecomposition dec = cyclic_classes(g);
        for (const OrderClasses& oc : dec.by_order) {
            ++checked;
            const std::size_t count = elements_of_order(g, oc.order).size();
            if (count % euler_phi(oc.order) != 0 || count / euler_phi(oc.order) != oc.classes.size()
                || oc.classes.size() < 2) {
                ++violations;
            }
        }
        detail << " " << text;
    }
    out.passed = violations == 0 && checked > 0;
    detail << "; " << checked << " orders, " << violations << " violations";
    out.detail = detail.str();
    return out;
}

// Criterion 5: same-length non-adjacency and descent partners on PSL(2,7).
Outcome psl27_brute_force()
{
    Outcome out;
    const auto start = Clock::now();
    const FiniteGroup g = build_group("PSL2_7");
    const PrimeBasis basis = factorize(g.order());
    auto len = [&](ElementId x) { return length(partial_vector(g.element_order(x), basis)); };

    std::size_t cross_pairs = 0;
    std::size_t adjacent_cross = 0;
    for (ElementId x = 1; x < g.order(); ++x) {
        for (ElementId y = x + 1; y < g.order(); ++y) {
            if (g.element_order(x) != g.element_order(y) && len(x) == len(y)) {
                ++cross_pairs;
                adjacent_cross += oracle::power_adjacent(g, x, y) ? 1 : 0;
            }
        }
    }

    std::size_t order_four = 0;
    std::size_t without_partner = 0;
    for (ElementId x = 1; x < g.order(); ++x) {
        if (len(x) != 2) {
            continue;
        }
        order_four += g.element_order(x) == 4 ? 1 : 0;
        bool found = false;
        for (ElementId y = 1; y < g.order() && !found; ++y) {
            found = len(y) == 1 && !oracle::power_adjacent(g, x, y);
        }
        without_partner += found ? 0 : 1;
    }
    const double secs = seconds_since(start);
    out.passed = adjacent_cross == 0 && cross_pairs > 0 && order_four == 42
                 && without_partner == 0 && secs < 5.0;
    std::ostringstream detail;
    detail << " " << cross_pairs << " cross pairs, " << adjacent_cross << " adjacent; "
           << order_four << " order-4 elements, " << without_partner << " without partner; "
           << secs << "s";
    out.detail = detail.str();
    return out;
}

const std::vector<std::string> kSmallGroups = {
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
    "D3", "D4", "D5", "D6", "Q2", "Q3", "E2_2", "E3_2", "E2_3",
    "X(C2,C2)", "X(C2,C3)", "X(C2,C4)", "X(C2,C5)", "X(C2,C6)", "X(C3,C3)", "X(C3,C4)",
    "X(C2,X(C2,C2))", "X(C2,X(C2,C3))",
};

// Criterion 6: lambda = |G| iff the punctured complement has a Hamiltonian path.
Outcome hamiltonian_criterion()
{
    Outcome out;
    const auto start = Clock::now();
    std::size_t mismatches = 0;
    std::size_t tight = 0;
    std::ostringstream detail;
    for (const std::string& text : kSmallGroups) {
        const FiniteGroup g = build_group(text);
        const PowerGraph pg = build_power_graph(g);
        const auto n = static_cast<std::int64_t>(g.order());
        const ExactResult exact = exact_lambda(pg.graph, 2 * (n - 1));
        const SearchResult path = backtracking_hamiltonian(punctured_complement(pg));
        const bool decided = exact.status == ExactStatus::Exact
                             && path.status != SearchStatus::BudgetExceeded;
        const bool agree = (exact.lambda == n) == (path.status == SearchStatus::Found);
        if (!decided || !agree || exact.lambda < n) {
            ++mismatches;
            detail << " mismatch:" << text;
        }
        tight += exact.lambda == n ? 1 : 0;
    }
    const double secs = seconds_since(start);
    out.passed = mismatches == 0 && secs < 120.0;
    detail << " " << kSmallGroups.size() << " groups, " << tight << " with lambda=|G|, "
           << mismatches << " mismatches; " << secs << "s";
    out.detail = detail.str();
    return out;
}

// Criterion 7: constructive success implies the oracle finds a path (|G| <= 60).
Outcome cross_oracle()
{
    const std::vector<std::string> candidates = {
        "C2", "C3", "C4", "C5", "C6", "C8", "C12", "D3", "D4", "D6", "D10", "Q2", "Q3", "Q5",
        "E2_2", "E2_3", "E2_4", "E2_5", "E3_2", "E3_3", "E5_2", "E7_2", "S3", "S4", "A4", "A5",
        "PSL2_5", "X(C2,C2)", "X(C2,C6)", "X(C3,C3)", "X(C2,A4)", "X(C3,C6)", "X(C2,X(C2,C6))",
        "X(E2_2,C3)", "X(C5,C5)", "X(C2,D3)", "X(C3,S3)", "X(C2,D5)",
    };
    Outcome out;
    std::size_t constructed = 0;
    std::size_t mismatches = 0;
    std::ostringstream detail;
    for (const std::string& text : candidates) {
        const FiniteGroup g = build_group(text);
        if (g.order() > 60) {
            continue;
        }
        const ClassDecomposition dec = cyclic_classes(g);
        const PowerGraph pg = build_power_graph(g);
        if (!constructive_obstructions(dec).empty()) {
            continue;
        }
        try {
            const ConstructiveResult built = build_constructive_hamiltonian(g, dec, pg);
            if (validate_hamiltonian(pg, built.path)) {
                continue;
            }
        } catch (const std::exception&) {
            continue;
        }
        ++constructed;
        const SearchResult r = backtracking_hamiltonian(punctured_complement(pg));
        if (r.status != SearchStatus::Found || validate_hamiltonian(pg, r.path)) {
            ++mismatches;
            detail << " mismatch:" << text;
        }
    }
    out.passed = mismatches == 0 && constructed > 0;
    detail << " " << constructed << " constructible groups, " << mismatches << " mismatches";
    out.detail = detail.str();
    return out;
}

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Criterion 8: `lambda A5 --json out.json` twice gives identical bytes.
Outcome determinism(const std::string& tool)
{
    Outcome out;
    const auto dir = std::filesystem::temp_directory_path() / "powerlambda_acceptance";
    std::filesystem::create_directories(dir);
    std::vector<std::string> contents;
    for (int run = 0; run < 2; ++run) {
        const auto file = dir / ("out" + std::to_string(run) + ".json");
        std::filesystem::remove(file);
        int code = 0;
        if (!tool.empty()) {
            const std::string cmd = "\"" + tool + "\" lambda A5 --json \"" + file.string()
                                    + "\" > /dev/null";
            code = std::system(cmd.c_str());
        } else {
            std::ostringstream sink;
            code = cli::run_cli({"lambda", "A5", "--json", file.string()}, sink, sink);
        }
        if (code != 0) {
            out.passed = false;
        }
        contents.push_back(read_file(file));
    }
    out.passed = out.passed && !contents[0].empty() && contents[0] == contents[1];
    out.detail = " " + std::to_string(contents[0].size()) + " bytes, "
                 + (contents[0] == contents[1] ? "identical" : "DIFFERENT")
                 + (tool.empty() ? " (in-process)" : " (subprocess)");
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    const std::string tool = argc > 1 ? argv[1] : "";
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"AC1 main theorem: lambda = |G| on A5, A6, PSL2_5, PSL2_7, PSL2_11", main_theorem},
        {"AC2 prime cyclic: lambda(K_p) = 2(p-1), p = 2,3,5,7", prime_cyclic},
        {"AC3 known families by exact search", known_families},
        {"AC4 width lemma on simple groups up to order 660", width_lemma},
        {"AC5 same-length and descent brute force on PSL2_7", psl27_brute_force},
        {"AC6 lambda = |G| iff Hamiltonian path, groups of order <= 12", hamiltonian_criterion},
        {"AC7 constructive success implies oracle path, |G| <= 60", cross_oracle},
        {"AC8 byte-identical lambda A5 --json", [&] { return determinism(tool); }},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string(" exception: ") + e.what()};
        }
        std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << c.name << " --" << o.detail
                  << std::endl;
        failures += o.passed ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << "\n";
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
