#include "commands.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "powerlambda/arith.hpp"
#include "powerlambda/catalog.hpp"
#include "powerlambda/errors.hpp"
#include "powerlambda/hampath.hpp"
#include "powerlambda/labelling.hpp"
#include "powerlambda/powergraph.hpp"
#include "powerlambda/spectrum.hpp"
#include "suites.hpp"

namespace powerlambda::cli {

namespace {

std::string tuple_text(const std::vector<std::uint64_t>& values)
{
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + std::to_string(values[i]);
    }
    return out + ")";
}

std::string basis_text(const PrimeBasis& basis)
{
    std::string out;
    for (std::size_t j = 0; j < basis.rank(); ++j) {
        if (j > 0) {
            out += " * ";
        }
        out += std::to_string(basis.primes[j]);
        if (basis.exponents[j] > 1) {
            out += "^" + std::to_string(basis.exponents[j]);
        }
    }
    return out;
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err)
{
    std::ofstream file(path, std::ios::binary);
    file << text;
    if (!file) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

// Writes to `path`, or to `out` when the path is empty.
bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err)
{
    if (path.empty()) {
        out << text;
        return true;
    }
    return write_file(path, text, err);
}

int cmd_info(const std::string& spec_text, std::ostream& out)
{
    const GroupSpec spec = parse_group_spec(spec_text);
    const FiniteGroup group = build_group(spec);
    out << "group: " << to_string(spec) << "\n";
    out << "order: " << group.order() << "\n";
    if (group.order() < 2) {
        return kExitOk;
    }
    const ClassDecomposition dec = cyclic_classes(group);
    std::vector<std::uint64_t> counts;
    for (const OrderClasses& oc : dec.by_order) {
        counts.push_back(oc.classes.size());
    }
    out << "prime basis: " << basis_text(dec.basis) << "\n";
    out << "spectrum: " << tuple_text(dec.spectrum) << "\n";
    out << "class counts: " << tuple_text(counts) << "\n";
    out << "simple (catalog): " << (is_nonabelian_simple(spec) ? "yes" : "no") << "\n";
    out << "orders:\n";
    for (const OrderClasses& oc : dec.by_order) {
        out << "  d=" << oc.order << " elements=" << oc.classes.size() * euler_phi(oc.order)
            << " classes=" << oc.classes.size() << " phi=" << euler_phi(oc.order)
            << " length=" << oc.length << "\n";
    }
    out << "strata:\n";
    for (const auto& [k, orders] : dec.strata) {
        out << "  k=" << k << " orders=" << tuple_text(orders)
            << " elements=" << stratum(dec, group, k).size() << "\n";
    }
    return kExitOk;
}

int cmd_classes(const std::string& spec_text, std::ostream& out)
{
    const FiniteGroup group = build_group(spec_text);
    const ClassDecomposition dec = cyclic_classes(group);
    for (const OrderClasses& oc : dec.by_order) {
        out << "order " << oc.order << " (length " << oc.length << ", " << oc.classes.size()
            << " classes)\n";
        for (std::size_t t = 0; t < oc.classes.size(); ++t) {
            out << "  F" << t + 1 << ":";
            for (ElementId x : oc.classes[t].members) {
                out << " " << group.name(x);
            }
            out << "\n";
        }
    }
    return kExitOk;
}

int cmd_graph(const std::string& spec_text, bool complement, const std::string& format,
              const std::string& out_path, std::ostream& out, std::ostream& err)
{
    const FiniteGroup group = build_group(spec_text);
    const PowerGraph pg = build_power_graph(group);
    std::string text;
    if (complement) {
        const PuncturedComplement pc = punctured_complement(pg);
        text = format == "edges" ? export_edges(pc) : export_dot(pc);
    } else {
        text = format == "edges" ? export_edges(pg) : export_dot(pg);
    }
    return emit(out_path, text, out, err) ? kExitOk : kExitFailure;
}

std::string path_text(const FiniteGroup& group, const Path& path, const std::string& format)
{
    if (format == "json") {
        nlohmann::ordered_json names = nlohmann::ordered_json::array();
        for (ElementId v : path) {
            names.push_back(group.name(v));
        }
        return names.dump(2) + "\n";
    }
    std::string text;
    for (ElementId v : path) {
        text += group.name(v) + "\n";
    }
    return text;
}

void trace_text(const FiniteGroup& group, const ConstructionTrace& trace, std::ostream& out)
{
    out << "# concatenation order (lengths):";
    for (int k : trace.concatenation_order) {
        out << " " << k;
    }
    out << "\n";
    for (const auto& [d, gamma] : trace.gamma) {
        out << "# gamma_" << d << ": " << gamma.size() << " vertices, starts at "
            << group.name(gamma.front()) << "\n";
    }
    for (const auto& [k, block] : trace.blocks) {
        out << "# E_" << k << ": " << block.size() << " vertices, " << group.name(block.front())
            << " ... " << group.name(block.back()) << "\n";
    }
    for (const Junction& j : trace.junctions) {
        out << "# junction " << group.name(j.from) << " (k=" << j.from_length << ") -> "
            << group.name(j.to) << " (k=" << j.to_length << ")\n";
    }
}

int cmd_hamiltonian(const std::string& spec_text, bool oracle, std::uint64_t budget,
                    const std::string& format, bool show_trace, const std::string& out_path,
                    std::ostream& out, std::ostream& err)
{
    const FiniteGroup group = build_group(spec_text);
    const PowerGraph pg = build_power_graph(group);
    Path path;
    if (oracle) {
        const SearchResult found = backtracking_hamiltonian(punctured_complement(pg), budget);
        err << "backtracking: " << to_string(found.status) << " after " << found.nodes
            << " nodes\n";
        if (found.status == SearchStatus::BudgetExceeded) {
            return kExitBoundsOnly;
        }
        if (found.status == SearchStatus::Exhausted) {
            return kExitFailure;
        }
        path = found.path;
    } else {
        const ClassDecomposition dec = cyclic_classes(group);
        ConstructiveResult built = build_constructive_hamiltonian(group, dec, pg);
        if (show_trace) {
            trace_text(group, built.trace, out);
        }
        path = std::move(built.path);
    }
    return emit(out_path, path_text(group, path, format), out, err) ? kExitOk : kExitFailure;
}

int cmd_label(const std::string& spec_text, std::uint64_t budget, const std::string& json_path,
              std::ostream& out, std::ostream& err)
{
    const GroupSpec spec = parse_group_spec(spec_text);
    const FiniteGroup group = build_group(spec);
    const PowerGraph pg = build_power_graph(group);
    LambdaReport report;
    report.group = to_string(spec);
    report.order = group.order();
    report.lower_bound = static_cast<std::int64_t>(group.order());

    Path path;
    const ClassDecomposition dec = cyclic_classes(group);
    if (constructive_obstructions(dec).empty()) {
        path = build_constructive_hamiltonian(group, dec, pg).path;
        report.method = LambdaMethod::Constructive;
    } else {
        const SearchResult found = backtracking_hamiltonian(punctured_complement(pg), budget);
        if (found.status != SearchStatus::Found) {
            err << "no Hamiltonian path in the punctured complement ("
                << to_string(found.status) << "); no labelling of span |G| exists\n";
            return found.status == SearchStatus::Exhausted ? kExitFailure : kExitBoundsOnly;
        }
        path = found.path;
        report.method = LambdaMethod::ExactSearch;
    }
    L21Labelling lab = labelling_from_path(pg, path);
    report.verified = verify_l21(pg, lab).valid;
    report.lambda = lab.span();
    report.witness = std::move(lab);

    for (std::size_t g = 0; g < group.order(); ++g) {
        out << group.name(static_cast<ElementId>(g)) << " " << report.witness->labels[g] << "\n";
    }
    out << "span = " << report.witness->span() << (report.verified ? " (verified)" : " (INVALID)")
        << "\n";
    if (!json_path.empty() && !write_file(json_path, *labelling_json(report, group), err)) {
        return kExitFailure;
    }
    return report.verified ? kExitOk : kExitFailure;
}

int cmd_lambda(const std::string& spec_text, bool exact, std::optional<std::int64_t> max_span,
               const std::string& json_path, std::ostream& out, std::ostream& err)
{
    const GroupSpec spec = parse_group_spec(spec_text);
    const FiniteGroup group = build_group(spec);
    LambdaOptions options;
    options.force_exact = exact;
    options.max_span = max_span;
    const LambdaReport report = lambda_of_group(group, spec, options);

    out << "group: " << report.group << "\n";
    out << "order: " << report.order << "\n";
    for (const std::string& note : report.notes) {
        out << "note: " << note << "\n";
    }
    if (report.lambda) {
        out << "lambda = " << *report.lambda << " (" << to_string(report.method)
            << (report.verified ? ", verified" : ", NOT verified") << ")\n";
    } else {
        out << "lambda >= " << report.lower_bound << " (" << to_string(report.method) << ")\n";
    }

    if (!json_path.empty()) {
        if (auto text = labelling_json(report, group)) {
            if (!write_file(json_path, *text, err)) {
                return kExitFailure;
            }
        } else {
            err << "no witness labelling; " << json_path << " not written\n";
        }
    }
    if (!report.lambda) {
        return kExitBoundsOnly;
    }
    return report.verified ? kExitOk : kExitFailure;
}

int cmd_check(const std::string& suite, std::ostream& out)
{
    std::vector<std::string> names;
    if (suite == "all") {
        names = suite_names();
    } else {
        names.push_back(suite);
    }
    std::vector<std::future<SuiteResult>> pending;
    for (const std::string& name : names) {
        pending.push_back(std::async(std::launch::async, run_suite, name));
    }
    bool all_passed = true;
    for (auto& f : pending) {
        const SuiteResult result = f.get();
        out << "[" << result.name << "]\n";
        for (const std::string& line : result.lines) {
            out << "  " << line << "\n";
        }
        out << result.name << ": " << (result.passed ? "PASS" : "FAIL") << "\n";
        all_passed = all_passed && result.passed;
    }
    return all_passed ? kExitOk : kExitFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Power graphs of finite groups and their L(2,1) lambda numbers", "powerlambda"};
    app.require_subcommand(1);

    std::string spec;
    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("group", spec, "Group spec, e.g. A5, PSL2_7, D4, E2_3, X(C2,C3)")
            ->required();
    };

    auto* info = app.add_subcommand("info", "Order, spectrum, class counts and strata");
    add_spec(info);

    auto* classes = app.add_subcommand("classes", "Cyclic class decomposition");
    add_spec(classes);

    bool complement = false;
    std::string graph_format = "dot";
    std::string out_path;
    auto* graph = app.add_subcommand("graph", "Export the power graph");
    add_spec(graph);
    graph->add_flag("--complement", complement, "Export the punctured complement instead");
    graph->add_option("--format", graph_format, "dot or edges")
        ->check(CLI::IsMember({"dot", "edges"}));
    graph->add_option("--out", out_path, "Output file (default: stdout)");

    bool oracle = false;
    bool show_trace = false;
    std::uint64_t budget = kDefaultNodeBudget;
    std::string path_format = "text";
    auto* hamiltonian = app.add_subcommand("hamiltonian",
                                           "Hamiltonian path in the punctured complement");
    add_spec(hamiltonian);
    hamiltonian->add_flag("--oracle", oracle, "Use backtracking search instead of construction");
    hamiltonian->add_option("--budget", budget, "Search node budget for --oracle");
    hamiltonian->add_option("--format", path_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    hamiltonian->add_flag("--trace", show_trace, "Print the construction trace");
    hamiltonian->add_option("--out", out_path, "Output file (default: stdout)");

    std::string json_path;
    auto* label = app.add_subcommand("label", "Labelling of span |G| from a Hamiltonian path");
    add_spec(label);
    label->add_option("--budget", budget, "Search node budget when no construction applies");
    label->add_option("--json", json_path, "Write the labelling as JSON");

    bool exact = false;
    std::optional<std::int64_t> max_span;
    auto* lambda = app.add_subcommand("lambda", "Lambda number with a verified witness");
    add_spec(lambda);
    lambda->add_flag("--exact", exact, "Force exhaustive search");
    lambda->add_option("--max-span", max_span, "Largest span tried by exhaustive search");
    lambda->add_option("--json", json_path, "Write the witness labelling as JSON");

    std::string suite = "all";
    auto* check = app.add_subcommand("check", "Run the built-in property suites");
    check->add_option("suite", suite, "lemma21, prop22, thm23, thm24, thm11 or all")
        ->check(CLI::IsMember({"lemma21", "prop22", "thm23", "thm24", "thm11", "all"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitFailure;
    }

    try {
        if (info->parsed()) {
            return cmd_info(spec, out);
        }
        if (classes->parsed()) {
            return cmd_classes(spec, out);
        }
        if (graph->parsed()) {
            return cmd_graph(spec, complement, graph_format, out_path, out, err);
        }
        if (hamiltonian->parsed()) {
            return cmd_hamiltonian(spec, oracle, budget, path_format, show_trace, out_path, out,
                                   err);
        }
        if (label->parsed()) {
            return cmd_label(spec, budget, json_path, out, err);
        }
        if (lambda->parsed()) {
            return cmd_lambda(spec, exact, max_span, json_path, out, err);
        }
        if (check->parsed()) {
            return cmd_check(suite, out);
        }
    } catch (const SpecError& e) {
        err << "error: " << e.what() << "\n"
            << "group specs: C<n> D<n> Q<n> E<p>_<k> S<n> A<n> PSL2_<p> X(<spec>,<spec>)\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

} // namespace powerlambda::cli
