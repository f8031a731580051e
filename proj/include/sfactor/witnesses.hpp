#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sfactor/catalog.hpp"
#include "sfactor/stability.hpp"

namespace sfactor {

// (i, alpha) of the n-cycle: (ceil(n/3), floor(n/2)); n >= 3
std::pair<int, int> cycle_formula(int n);

// (i, alpha) of Cay(D_n, boundary{e,a,b}): (ceil(2n/5), floor(2n/3)); n >= 3
std::pair<int, int> dihedral_formula(int n);

struct QuotientWitness {
    ElementSet subset;          // A = (H \ {h}) u {g}
    ElementSet dominating_set;  // independent dominating set of size ceil(n/2)
    int quotient_order = 0;     // n = |G : H|
};

// Instability witness for a group with a normal subgroup H (|H| >= 3) whose
// quotient is cyclic of order n >= 4, generated by the coset of an element g
// with g^n = e.  Builds A = (H \ {h}) u {g} together with an independent
// dominating set I = {g^{2i} x_i} of Cay(G, boundary(A)), choosing each x_i
// as the least element of H that avoids the coverage-hole collisions between
// consecutive odd cosets (with the end-around and odd-case adjustments).
// The returned sets are verified: I independent and dominating of size
// ceil(n/2), and the chain of (h^-1 g)-powers independent of size n-1, so
// the lower index sits strictly below the upper one.
QuotientWitness cyclic_quotient_witness(const FiniteGroup& g, const ElementSet& h_subgroup,
                                        int coset_rep, int dropped);

// The fourteen stable groups, in catalog order.
std::vector<NamedGroup> stable_group_catalog();

// One regression row per directly computed instance: group, its designated
// subset, and the expected (lower, upper) indices.
struct PaperInstance {
    std::string spec;
    FiniteGroup group;
    ElementSet subset;
    int expected_lower = 0;
    int expected_upper = 0;
};
std::vector<PaperInstance> paper_instance_table();

// Inputs for cyclic_quotient_witness used by the classification run and the
// acceptance suite (all orders <= 60).
struct QuotientInstance {
    std::string description;
    FiniteGroup group;
    ElementSet subgroup;
    int coset_rep = 0;
    int dropped = 0;
};
std::vector<QuotientInstance> quotient_witness_instances();

struct CatalogVerdict {
    std::string name;
    int order = 0;
    StabilityReport report;
};

struct ExcludedWitness {
    std::string group_name;
    std::string subset;  // label form
    int lower = 0;
    int upper = 0;
    bool confirmed = false;  // lower < upper
};

struct ClassificationRun {
    std::vector<CatalogVerdict> catalog_results;
    std::vector<ExcludedWitness> excluded_witnesses;
    bool budget_exceeded = false;
    bool all_pass = false;
};

// Exhaustively certifies all catalog groups stable and confirms the
// instability of every excluded witness the classification rests on.
ClassificationRun verify_classification(const SolveBudget& budget = {}, int workers = 1);

std::string render_classification_text(const ClassificationRun& run);

}  // namespace sfactor
