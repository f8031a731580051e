#include "sfactor/witnesses.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace sfactor {

std::pair<int, int> cycle_formula(int n) {
    if (n < 3) throw Error(errc::bad_entry, "cycle formula needs n >= 3");
    return {(n + 2) / 3, n / 2};
}

std::pair<int, int> dihedral_formula(int n) {
    if (n < 3) throw Error(errc::bad_entry, "dihedral formula needs n >= 3");
    return {(2 * n + 4) / 5, 2 * n / 3};
}

QuotientWitness cyclic_quotient_witness(const FiniteGroup& g, const ElementSet& h_subgroup,
                                        int coset_rep, int dropped) {
    if (!is_subgroup(g, h_subgroup)) throw Error(errc::not_subgroup, "H is not a subgroup");
    if (!is_normal_subgroup(g, h_subgroup)) throw Error(errc::not_normal, "H is not normal");
    if (h_subgroup.size() < 3) throw Error(errc::subgroup_too_small, "witness construction needs |H| >= 3");
    int n = g.order / h_subgroup.size();
    if (n < 4) throw Error(errc::bad_quotient, "quotient order must be at least 4");
    if (coset_rep < 0 || coset_rep >= g.order || dropped < 0 || dropped >= g.order)
        throw Error(errc::bad_element, "element index out of range");
    {
        int k = 1, x = coset_rep;
        while (!h_subgroup.contains(x)) {
            x = g.mul(x, coset_rep);
            ++k;
        }
        if (k != n) throw Error(errc::bad_quotient, "Hg does not generate the quotient cyclically");
    }
    if (g.power(coset_rep, n) != g.identity)
        throw Error(errc::bad_coset_rep, "coset representative must satisfy g^n = e");
    if (!h_subgroup.contains(dropped) || dropped == g.identity)
        throw Error(errc::bad_element, "h must be a non-identity element of H");

    const int grep = coset_rep, hel = dropped;
    int k = (n + 1) / 2 - 1;
    int eta = g.mul(g.inv(hel), grep);       // h^-1 g
    int eta_inv = g.inv(eta);                // g^-1 h

    // x_{i+1} != g^{-2i-2} (h^-1 g)^2 g^{2i} x_i keeps the coverage hole of
    // v_i in the odd coset above it apart from the hole of v_{i+1} below it
    auto forward_clash = [&](int i, int xi) {
        int t = g.mul(eta, eta);
        t = g.mul(g.power(grep, -2 * i - 2), g.mul(t, g.mul(g.power(grep, 2 * i), xi)));
        return t;
    };
    auto pick = [&](std::initializer_list<int> forbidden) {
        for (int v = h_subgroup.bits.lowest(); v >= 0; v = h_subgroup.bits.next(v)) {
            bool bad = false;
            for (int f : forbidden) bad = bad || v == f;
            if (!bad) return v;
        }
        throw std::logic_error("no admissible x_i although |H| >= 3");
    };

    std::vector<int> xs(k + 1, g.identity);
    for (int i = 0; i + 1 <= k - 1; ++i) xs[i + 1] = pick({forward_clash(i, xs[i])});
    if (n % 2 == 0) {
        // end-around: the hole of v_k in the top coset must miss the hole of v_0
        int wrap = g.mul(g.power(grep, -2 * k), g.mul(eta_inv, eta_inv));
        xs[k] = pick({forward_clash(k - 1, xs[k - 1]), wrap});
    } else {
        xs[k] = hel;  // v_k = g^-1 h
        int wrap = g.mul(g.power(grep, -2 * k + 2), g.mul(eta_inv, g.mul(eta_inv, eta_inv)));
        xs[k - 1] = pick({forward_clash(k - 2, xs[k - 2]), wrap});
    }

    QuotientWitness out;
    out.quotient_order = n;
    out.subset = ElementSet(g.order);
    out.subset.bits = h_subgroup.bits;
    out.subset.remove(hel);
    out.subset.add(grep);
    out.dominating_set = ElementSet(g.order);
    for (int i = 0; i <= k; ++i) out.dominating_set.add(g.mul(g.power(grep, 2 * i), xs[i]));

    // verify everything the construction promises
    Graph graph = cayley_graph(g, boundary_set(g, out.subset));
    if (out.dominating_set.size() != k + 1 || !is_maximal_independent_set(graph, out.dominating_set.bits))
        throw std::logic_error("constructed set is not independent dominating of size ceil(n/2)");
    ElementSet chain(g.order);
    for (int j = 0; j <= n - 2; ++j) chain.add(g.power(eta, j));
    if (chain.size() != n - 1 || !is_independent_set(graph, chain.bits))
        throw std::logic_error("the (h^-1 g)-power chain is not independent of size n-1");
    return out;
}

std::vector<NamedGroup> stable_group_catalog() {
    std::vector<NamedGroup> out;
    for (const char* spec :
         {"cyclic:1", "cyclic:2", "elementary:2:2", "elementary:2:3", "elementary:2:4", "cyclic:3",
          "elementary:3:2", "cyclic:4", "cyclic:2*cyclic:4", "cyclic:5", "cyclic:7", "dihedral:3",
          "dihedral:4", "quaternion8"}) {
        NamedGroup ng = make_named_group(spec);
        if (!ng.designated_subset) {
            // the product entry: e plus one generator of each factor
            ElementSet a(ng.group.order, {0, 4, 1});
            ng.designated_subset = a;
        }
        ng.group.name = spec;
        out.push_back(std::move(ng));
    }
    return out;
}

std::vector<PaperInstance> paper_instance_table() {
    struct Row {
        const char* spec;
        int lower, upper;
    };
    const Row rows[] = {
        {"c7_rtimes_c3", 3, 6},   {"ut3_3", 3, 6},          {"elementary:2:5", 2, 4},
        {"elementary:3:3", 3, 4}, {"alt4", 2, 3},           {"c3c3_rtimes_c2", 2, 4},
        {"order16_id11", 2, 4},   {"order16_id12", 2, 4},   {"order16_id13", 2, 4},
    };
    std::vector<PaperInstance> out;
    for (const Row& r : rows) {
        NamedGroup ng = make_named_group(r.spec);
        PaperInstance pi;
        pi.spec = r.spec;
        pi.subset = *ng.designated_subset;
        pi.group = std::move(ng.group);
        pi.expected_lower = r.lower;
        pi.expected_upper = r.upper;
        out.push_back(std::move(pi));
    }
    return out;
}

namespace {

FiniteGroup make_cn_rtimes_c4(int p, int mult, const std::string& name) {
    // C_p x| C_4 where the generator of C_4 acts by x -> mult * x
    FiniteGroup cp = make_cyclic(p);
    FiniteGroup c4 = make_cyclic(4);
    std::vector<std::vector<int>> action(4, std::vector<int>(p));
    long m = 1;
    for (int h = 0; h < 4; ++h) {
        for (int x = 0; x < p; ++x) action[h][x] = static_cast<int>(m * x % p);
        m = m * mult % p;
    }
    FiniteGroup g = make_semidirect(cp, c4, action);
    g.name = name;
    return g;
}

ElementSet cyclic_subgroup(const FiniteGroup& g, int gen) {
    ElementSet s(g.order);
    s.add(gen);
    return subgroup_generated(g, s);
}

}  // namespace

std::vector<QuotientInstance> quotient_witness_instances() {
    std::vector<QuotientInstance> out;

    auto add_cyclic = [&](int order, int hgen, int grep) {
        FiniteGroup g = make_cyclic(order);
        ElementSet h = cyclic_subgroup(g, hgen);
        out.push_back({"cyclic:" + std::to_string(order) + " over <" + std::to_string(hgen) + ">",
                       std::move(g), std::move(h), grep, hgen});
    };
    add_cyclic(12, 4, 3);   // quotient C4
    add_cyclic(15, 5, 3);   // quotient C5
    add_cyclic(21, 7, 3);   // quotient C7
    add_cyclic(60, 12, 5);  // quotient C12

    {
        FiniteGroup g = make_cn_rtimes_c4(3, 2, "c3_rtimes_c4");
        ElementSet h = cyclic_subgroup(g, 1 * 4);  // the C3 kernel, indices {0,4,8}
        out.push_back({"c3_rtimes_c4 over its C3", std::move(g), std::move(h), 1, 4});
    }
    {
        FiniteGroup g = make_cn_rtimes_c4(5, 2, "c5_rtimes_c4");
        ElementSet h = cyclic_subgroup(g, 1 * 4);
        out.push_back({"c5_rtimes_c4 over its C5", std::move(g), std::move(h), 1, 4});
    }
    {
        FiniteGroup g = make_direct_product(make_cyclic(4), make_cyclic(4));
        g.name = "cyclic:4*cyclic:4";
        ElementSet h = cyclic_subgroup(g, 1 * 4);  // first factor
        out.push_back({"cyclic:4*cyclic:4 over a factor", std::move(g), std::move(h), 1, 4});
    }
    return out;
}

ClassificationRun verify_classification(const SolveBudget& budget, int workers) {
    ClassificationRun run;
    bool all_stable = true;

    for (NamedGroup& entry : stable_group_catalog()) {
        CatalogVerdict verdict;
        verdict.name = entry.group.name;
        verdict.order = entry.group.order;
        try {
            ScanOptions opts;
            opts.workers = workers;
            verdict.report = is_stable_group(entry.group, budget, opts);
        } catch (const BudgetExceeded&) {
            run.budget_exceeded = true;
            run.catalog_results.push_back(std::move(verdict));
            break;
        }
        all_stable = all_stable && verdict.report.stable();
        run.catalog_results.push_back(std::move(verdict));
    }

    bool all_confirmed = true;
    auto add_witness = [&](const std::string& name, const FiniteGroup& g, const ElementSet& a) {
        if (run.budget_exceeded) return;
        ExcludedWitness w;
        w.group_name = name;
        w.subset = join_labels(g, a);
        try {
            IndexReport ir = subset_indices(g, a, budget);
            w.lower = ir.lower;
            w.upper = ir.upper;
            w.confirmed = ir.lower < ir.upper;
        } catch (const BudgetExceeded&) {
            run.budget_exceeded = true;
        }
        all_confirmed = all_confirmed && w.confirmed;
        run.excluded_witnesses.push_back(std::move(w));
    };

    for (const PaperInstance& pi : paper_instance_table()) add_witness(pi.spec, pi.group, pi.subset);
    for (const char* spec : {"dihedral:5", "dihedral:7", "cyclic:6", "cyclic:8", "cyclic:9"}) {
        NamedGroup ng = make_named_group(spec);
        add_witness(spec, ng.group, *ng.designated_subset);
    }
    for (const QuotientInstance& qi : quotient_witness_instances()) {
        if (run.budget_exceeded) break;
        QuotientWitness qw = cyclic_quotient_witness(qi.group, qi.subgroup, qi.coset_rep, qi.dropped);
        add_witness(qi.description, qi.group, qw.subset);
    }

    run.all_pass = !run.budget_exceeded && all_stable && all_confirmed;
    return run;
}

std::string render_classification_text(const ClassificationRun& run) {
    std::ostringstream out;
    out << "stable-group catalog (" << run.catalog_results.size() << " groups)\n";
    for (const CatalogVerdict& v : run.catalog_results) {
        const char* verdict = v.report.verdict == Verdict::stable     ? "stable"
                              : v.report.verdict == Verdict::unstable ? "UNSTABLE"
                                                                      : "inconclusive";
        out << "  " << std::left << std::setw(22) << v.name << " order " << std::right << std::setw(3)
            << v.order << "  " << std::left << std::setw(12) << verdict << " representatives "
            << v.report.subsets_examined << "\n";
    }
    out << "instability witnesses (" << run.excluded_witnesses.size() << ")\n";
    for (const ExcludedWitness& w : run.excluded_witnesses) {
        out << "  " << std::left << std::setw(34) << w.group_name << " A={" << w.subset << "}  lower "
            << w.lower << "  upper " << w.upper << "  " << (w.confirmed ? "confirmed" : "NOT CONFIRMED")
            << "\n";
    }
    if (run.budget_exceeded) out << "budget exceeded: results are partial\n";
    out << "all-pass: " << (run.all_pass ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace sfactor
