#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sfactor/table_io.hpp"
#include "sfactor/witnesses.hpp"

using nlohmann::json;
using namespace sfactor;

namespace {

NamedGroup resolve_group(const std::string& spec) {
    try {
        return make_named_group(spec);
    } catch (const Error& e) {
        if (e.code == errc::unknown_group) {
            std::ifstream probe(spec);
            if (probe.good()) {
                NamedGroup ng;
                ng.group = load_group_table_file(spec);
                ng.description = "group table file";
                return ng;
            }
        }
        throw;
    }
}

// comma-separated labels; commas inside parentheses belong to the label
std::vector<std::string> split_labels(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

ElementSet resolve_subset(const NamedGroup& ng, const std::string& spec) {
    if (spec == "paper") {
        if (!ng.designated_subset)
            throw Error(errc::unknown_label,
                        "group " + ng.group.name + " carries no designated subset; list elements instead");
        return *ng.designated_subset;
    }
    ElementSet a(ng.group.order);
    for (const std::string& lab : split_labels(spec)) a.add(ng.group.element_by_label(lab));
    return a;
}

json labels_json(const FiniteGroup& g, const ElementSet& s) {
    json arr = json::array();
    for (int v = s.bits.lowest(); v >= 0; v = s.bits.next(v)) arr.push_back(g.labels[v]);
    return arr;
}

struct CommonArgs {
    std::string group_spec;
    std::string subset_spec = "paper";
    std::string side = "right";
    std::string output = "text";
    std::uint64_t budget_nodes = SolveBudget{}.node_limit;
    long budget_ms = 0;
    bool budget_given = false;
    int workers = 1;
    bool exhaustive = false;
    bool all_subsets = false;
    std::string highlight;
    std::string subgroup_spec;
    std::string rep_label;
    std::string drop_label;

    SolveBudget budget() const {
        SolveBudget b;
        b.node_limit = budget_nodes;
        if (budget_ms > 0) b.time_limit = std::chrono::milliseconds(budget_ms);
        return b;
    }
};

int cmd_indices(const CommonArgs& args) {
    NamedGroup ng = resolve_group(args.group_spec);
    ElementSet a = resolve_subset(ng, args.subset_spec);
    if (args.side != "right" && args.side != "left")
        throw Error(errc::bad_format, "--side must be right or left");
    bool left = args.side == "left";

    const FiniteGroup& g = ng.group;
    // the left-handed report describes the graph of the opposite group,
    // whose connection set is A A^-1 instead of A^-1 A
    FiniteGroup graph_side = left ? opposite_group(g) : g;
    ElementSet boundary = boundary_set(graph_side, a);
    int components = static_cast<int>(graph_components(graph_side, boundary).size());
    IndexReport ir = left ? left_subset_indices(g, a, args.budget()) : subset_indices(g, a, args.budget());

    if (args.output == "json") {
        json j;
        j["command"] = "indices";
        j["group"] = g.name;
        j["order"] = g.order;
        j["side"] = args.side;
        j["subset"] = labels_json(g, a);
        j["boundary"] = labels_json(g, boundary);
        j["components"] = components;
        j["lower"] = ir.lower;
        j["upper"] = ir.upper;
        j["stable"] = ir.stable;
        j["witness_small"] = labels_json(g, ir.witness_small);
        j["witness_large"] = labels_json(g, ir.witness_large);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group: " << g.name << " (order " << g.order << ")\n";
        std::cout << "side: " << args.side << "\n";
        std::cout << "subset: " << join_labels(g, a) << "\n";
        std::cout << "boundary: " << join_labels(g, boundary) << "\n";
        std::cout << "components: " << components << "\n";
        std::cout << "lower: " << ir.lower << "\n";
        std::cout << "upper: " << ir.upper << "\n";
        std::cout << "stable: " << (ir.stable ? "yes" : "no") << "\n";
        std::cout << "witness-small: " << join_labels(g, ir.witness_small) << "\n";
        std::cout << "witness-large: " << join_labels(g, ir.witness_large) << "\n";
    }
    return 0;
}

int cmd_stable(const CommonArgs& args) {
    NamedGroup ng = resolve_group(args.group_spec);
    if (args.exhaustive && ng.group.order > 16 && !args.budget_given)
        throw Error(errc::bad_format,
                    "exhaustive scans past order 16 need an explicit --budget-nodes or --budget-ms");
    ScanOptions opts;
    opts.workers = args.workers;
    opts.exhaustive = args.exhaustive;
    opts.designated_witness = ng.designated_subset;
    StabilityReport rep = is_stable_group(ng.group, args.budget(), opts);

    if (args.output == "json") {
        json j;
        j["command"] = "stable";
        j["group"] = ng.group.name;
        j["order"] = ng.group.order;
        j["stable"] = rep.verdict == Verdict::inconclusive ? json(nullptr) : json(rep.stable());
        j["witness"] = rep.witness_subset ? labels_json(ng.group, *rep.witness_subset) : json(nullptr);
        j["lower"] = rep.witness_subset ? json(rep.witness_lower) : json(nullptr);
        j["upper"] = rep.witness_subset ? json(rep.witness_upper) : json(nullptr);
        j["examined"] = rep.subsets_examined;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group: " << ng.group.name << " (order " << ng.group.order << ")\n";
        std::cout << "verdict: "
                  << (rep.verdict == Verdict::stable     ? "stable"
                      : rep.verdict == Verdict::unstable ? "unstable"
                                                         : "inconclusive")
                  << "\n";
        std::cout << "examined: " << rep.subsets_examined << "\n";
        if (rep.witness_subset) {
            std::cout << "witness: " << join_labels(ng.group, *rep.witness_subset) << "\n";
            std::cout << "lower: " << rep.witness_lower << "\n";
            std::cout << "upper: " << rep.witness_upper << "\n";
        }
    }
    switch (rep.verdict) {
        case Verdict::stable: return 0;
        case Verdict::unstable: return 1;
        default: return 3;
    }
}

int cmd_classify(const CommonArgs& args) {
    ClassificationRun run = verify_classification(args.budget(), args.workers);
    if (args.output == "json") {
        json j;
        j["command"] = "classify";
        j["all_pass"] = run.all_pass;
        j["budget_exceeded"] = run.budget_exceeded;
        json cat = json::array();
        for (const CatalogVerdict& v : run.catalog_results) {
            json e;
            e["group"] = v.name;
            e["order"] = v.order;
            e["stable"] = v.report.verdict == Verdict::stable;
            e["examined"] = v.report.subsets_examined;
            cat.push_back(e);
        }
        j["catalog"] = cat;
        json wit = json::array();
        for (const ExcludedWitness& w : run.excluded_witnesses) {
            json e;
            e["group"] = w.group_name;
            e["subset"] = w.subset;
            e["lower"] = w.lower;
            e["upper"] = w.upper;
            e["confirmed"] = w.confirmed;
            wit.push_back(e);
        }
        j["excluded_witnesses"] = wit;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_classification_text(run);
    }
    if (run.budget_exceeded) return 3;
    return run.all_pass ? 0 : 1;
}

int cmd_witness(const CommonArgs& args) {
    NamedGroup ng = resolve_group(args.group_spec);
    const FiniteGroup& g = ng.group;
    ElementSet gens(g.order);
    for (const std::string& lab : split_labels(args.subgroup_spec)) gens.add(g.element_by_label(lab));
    ElementSet h = subgroup_generated(g, gens);
    int rep = g.element_by_label(args.rep_label);
    int drop = args.drop_label.empty() ? -1 : g.element_by_label(args.drop_label);
    if (drop < 0) {
        // default: first non-identity element of H
        drop = h.bits.next(0);
        if (drop < 0) throw Error(errc::subgroup_too_small, "subgroup is trivial");
    }
    QuotientWitness qw = cyclic_quotient_witness(g, h, rep, drop);
    IndexReport ir = subset_indices(g, qw.subset, args.budget());

    if (args.output == "json") {
        json j;
        j["command"] = "witness";
        j["group"] = g.name;
        j["subgroup"] = labels_json(g, h);
        j["quotient_order"] = qw.quotient_order;
        j["subset"] = labels_json(g, qw.subset);
        j["dominating_set"] = labels_json(g, qw.dominating_set);
        j["lower"] = ir.lower;
        j["upper"] = ir.upper;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group: " << g.name << " (order " << g.order << ")\n";
        std::cout << "subgroup: " << join_labels(g, h) << "\n";
        std::cout << "quotient-order: " << qw.quotient_order << "\n";
        std::cout << "subset: " << join_labels(g, qw.subset) << "\n";
        std::cout << "dominating-set: " << join_labels(g, qw.dominating_set) << "\n";
        std::cout << "lower: " << ir.lower << "\n";
        std::cout << "upper: " << ir.upper << "\n";
    }
    return ir.lower < ir.upper ? 0 : 1;
}

int cmd_export(const CommonArgs& args) {
    NamedGroup ng = resolve_group(args.group_spec);
    const FiniteGroup& g = ng.group;
    ElementSet a = resolve_subset(ng, args.subset_spec);
    Graph graph = cayley_graph(g, boundary_set(g, a));

    if (args.highlight.empty()) {
        std::cout << export_dot(graph);
        return 0;
    }
    Bits marks;
    if (args.highlight == "witness-small" || args.highlight == "witness-large") {
        IndexReport ir = subset_indices(g, a, args.budget());
        marks = args.highlight == "witness-small" ? ir.witness_small.bits : ir.witness_large.bits;
    } else {
        for (const std::string& lab : split_labels(args.highlight)) marks.set(g.element_by_label(lab));
    }
    std::cout << export_dot(graph, &marks);
    return 0;
}

int cmd_oracle(const CommonArgs& args) {
    NamedGroup ng = resolve_group(args.group_spec);
    const FiniteGroup& g = ng.group;
    if (g.order > 14) throw Error(errc::too_large, "oracle comparison is capped at order 14");

    std::vector<ElementSet> cases;
    if (args.all_subsets) {
        // every subset containing the identity
        std::uint32_t total = 1u << (g.order - 1);
        for (std::uint32_t mask = 0; mask < total; ++mask) {
            ElementSet a(g.order);
            a.add(0);
            for (int v = 1; v < g.order; ++v)
                if ((mask >> (v - 1)) & 1) a.add(v);
            cases.push_back(std::move(a));
        }
    } else {
        cases.push_back(resolve_subset(ng, args.subset_spec));
    }

    for (const ElementSet& a : cases) {
        IndexReport fast = subset_indices(g, a, args.budget());
        IndexReport slow = brute_force_indices(g, a);
        if (fast.lower != slow.lower || fast.upper != slow.upper) {
            std::cout << "mismatch on subset " << join_labels(g, a) << ": solver (" << fast.lower << ","
                      << fast.upper << ") vs brute force (" << slow.lower << "," << slow.upper << ")\n";
            return 1;
        }
    }
    std::cout << "agreement on " << cases.size() << " subset" << (cases.size() == 1 ? "" : "s") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subset indices and stable groups via Cayley graph independence"};
    app.require_subcommand(1);
    CommonArgs args;

    auto add_common = [&](CLI::App* sub, bool needs_group) {
        if (needs_group)
            sub->add_option("--group", args.group_spec, "named group family or table file path")->required();
        sub->add_option("--output", args.output, "text|json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option_function<std::uint64_t>(
               "--budget-nodes",
               [&args](std::uint64_t v) {
                   args.budget_nodes = v;
                   args.budget_given = true;
               },
               "search-node limit per exact solve");
        sub->add_option_function<long>(
            "--budget-ms",
            [&args](long v) {
                args.budget_ms = v;
                args.budget_given = true;
            },
            "wall-clock limit per operation, milliseconds");
    };

    CLI::App* indices = app.add_subcommand("indices", "lower/upper indices of a subset");
    add_common(indices, true);
    indices->add_option("--subset", args.subset_spec, "comma-separated element labels, or 'paper'");
    indices->add_option("--side", args.side, "right|left")->check(CLI::IsMember({"right", "left"}));

    CLI::App* stable = app.add_subcommand("stable", "decide stability of a whole group");
    add_common(stable, true);
    stable->add_option("--workers", args.workers, "scan worker threads");
    stable->add_flag("--exhaustive", args.exhaustive, "scan groups of order 17..32 exhaustively");

    CLI::App* classify = app.add_subcommand("classify", "verify the stable-group classification");
    add_common(classify, false);
    classify->add_option("--workers", args.workers, "scan worker threads");

    CLI::App* witness = app.add_subcommand("witness", "cyclic-quotient instability witness");
    add_common(witness, true);
    witness->add_option("--subgroup", args.subgroup_spec, "labels generating the normal subgroup H")
        ->required();
    witness->add_option("--rep", args.rep_label, "label of the coset representative g")->required();
    witness->add_option("--drop", args.drop_label, "label of the element h removed from H");

    CLI::App* exportc = app.add_subcommand("export", "DOT of Cay(G, boundary(A))");
    add_common(exportc, true);
    exportc->add_option("--subset", args.subset_spec, "comma-separated element labels, or 'paper'");
    exportc->add_option("--highlight", args.highlight, "witness-small|witness-large|label list");

    CLI::App* oracle = app.add_subcommand("oracle", "solver vs definition-level brute force");
    add_common(oracle, true);
    oracle->add_option("--subset", args.subset_spec, "comma-separated element labels, or 'paper'");
    oracle->add_flag("--all-subsets", args.all_subsets, "check every subset containing the identity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (indices->parsed()) return cmd_indices(args);
        if (stable->parsed()) return cmd_stable(args);
        if (classify->parsed()) return cmd_classify(args);
        if (witness->parsed()) return cmd_witness(args);
        if (exportc->parsed()) return cmd_export(args);
        if (oracle->parsed()) return cmd_oracle(args);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
