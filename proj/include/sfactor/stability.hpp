#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfactor/solver.hpp"

namespace sfactor {

// The two indices of a subset plus one verified s-factor of each extreme size.
struct IndexReport {
    int lower = 0;
    int upper = 0;
    ElementSet witness_small;
    ElementSet witness_large;
    bool stable = false;  // lower == upper
};

// True iff b is a right s-factor associated with a: the products ab are
// pairwise distinct over A x B, and no further element can be added to B
// without breaking that.  Checked straight from the definition, independent
// of the graph machinery.
bool sfactor_check(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);

// Lower and upper right indices of a via the Cayley graph of its boundary
// set; witnesses are re-verified with sfactor_check before returning.
IndexReport subset_indices(const FiniteGroup& g, const ElementSet& a, const SolveBudget& budget = {});

// Left indices, computed by running the right-handed machinery in the
// opposite group; the returned witnesses are left s-factors of a in g.
IndexReport left_subset_indices(const FiniteGroup& g, const ElementSet& a, const SolveBudget& budget = {});

// Definition-level oracle: scans all 2^|G| candidate sets.  |G| <= 14.
IndexReport brute_force_indices(const FiniteGroup& g, const ElementSet& a);

// Translates of a subset all share the same s-factors, so scans work on one
// representative per class {xA}: the translate least in the
// lowest-differing-element order, which always contains the identity.
bool is_canonical_translate(const FiniteGroup& g, const ElementSet& a);
ElementSet canonical_translate(const FiniteGroup& g, const ElementSet& a);

// All class representatives among non-empty subsets, ascending |A| then
// lexicographic.  Materializes the list; capped at order 20.
std::vector<ElementSet> translation_class_representatives(const FiniteGroup& g);

enum class Verdict { stable, unstable, inconclusive };

struct StabilityReport {
    std::string group_name;
    Verdict verdict = Verdict::inconclusive;
    std::optional<ElementSet> witness_subset;
    int witness_lower = 0;
    int witness_upper = 0;
    // representatives considered up to the verdict: all of them for a
    // stable verdict, those up to and including the witness otherwise
    std::uint64_t subsets_examined = 0;

    bool stable() const { return verdict == Verdict::stable; }
};

struct ScanOptions {
    int workers = 1;
    // Groups of order 17..32 are scanned exhaustively only on request;
    // beyond 32 exhaustive mode is refused outright.
    bool exhaustive = false;
    // Checked instead of scanning when exhaustive mode is unavailable.
    std::optional<ElementSet> designated_witness;
};

// Decide stability of the whole group.  The exhaustive scan walks the
// translation-class representatives with e in A in canonical order, skipping
// |A| = 1 and complete-boundary subsets (both trivially stable), and reports
// the first unstable witness in that order; the verdict is deterministic for
// any worker count.  The node budget applies to each representative solve.
StabilityReport is_stable_group(const FiniteGroup& g, const SolveBudget& budget = {},
                                const ScanOptions& opts = {});

}  // namespace sfactor
