#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "sfactor/graph.hpp"

namespace sfactor {

class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& m = "solve budget exceeded") : std::runtime_error(m) {}
};

// Limits for one exact solve.  node_limit caps the search-tree nodes of a
// single top-level solve call; time_limit is wall clock for the whole
// enclosing operation.  When a limit is hit the solver throws
// BudgetExceeded instead of returning a wrong number.
struct SolveBudget {
    std::uint64_t node_limit = 100'000'000;
    std::optional<std::chrono::milliseconds> time_limit;

    static SolveBudget unlimited() { return {UINT64_MAX, std::nullopt}; }
};

struct SolveOutcome {
    int size = 0;
    Bits members;
};

struct EnumerationSummary {
    std::uint64_t count = 0;
    int min_size = 0;
    int max_size = 0;
};

struct ValuePair {
    int idom = 0;
    int alpha = 0;
};

// i(G) >= ceil(|V| / (max degree + 1))
int berge_lower_bound(const Graph& g);

// Exact alpha(G) with one maximum independent set as witness.  Branch and
// bound with a greedy clique-cover upper bound; components are solved
// separately and, for Cayley graphs, each component is first reduced by
// deleting N[v] of its lowest vertex (vertex-transitivity drops both
// invariants by exactly one).
SolveOutcome independence_number(const Graph& g, const SolveBudget& budget = {});

// Exact i(G) with one minimum maximal independent set as witness.  Branches
// on the dominators of the lowest undominated vertex, prunes against the
// best set found so far, and stops once the Berge bound is attained.
SolveOutcome independent_domination_number(const Graph& g, const SolveBudget& budget = {});

// Both values in one call, skipping witness assembly; identical coset
// components of a Cayley graph are solved once and multiplied.
ValuePair independence_values(const Graph& g, const SolveBudget& budget = {});

// visitor returns false to stop early
using MisVisitor = std::function<bool(const Bits&, int)>;

// Visits every maximal independent set exactly once (pivoting clique
// enumeration on the complement).  Summary min/max equal i(G)/alpha(G).
EnumerationSummary enumerate_maximal_independent_sets(const Graph& g, const SolveBudget& budget = {},
                                                      const MisVisitor& visitor = {});

struct BruteAlphaI {
    int alpha = 0;
    int idom = 0;
};

// Independent oracle: enumerate all 2^|V| vertex subsets.  |V| <= 24.
BruteAlphaI brute_force_alpha_i(const Graph& g);

bool is_independent_set(const Graph& g, const Bits& s);
bool is_dominating_set(const Graph& g, const Bits& s);
bool is_maximal_independent_set(const Graph& g, const Bits& s);

}  // namespace sfactor
