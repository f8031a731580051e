#include "sfactor/solver.hpp"

#include <algorithm>

namespace sfactor {

namespace {

using Clock = std::chrono::steady_clock;

struct Meter {
    std::uint64_t limit;
    std::uint64_t used = 0;
    std::optional<Clock::time_point> deadline;

    explicit Meter(const SolveBudget& b) : limit(b.node_limit) {
        if (b.time_limit) deadline = Clock::now() + *b.time_limit;
    }

    void tick() {
        if (++used > limit) throw BudgetExceeded("node budget exceeded after " + std::to_string(limit) + " nodes");
        if (deadline && (used & 1023) == 0 && Clock::now() > *deadline)
            throw BudgetExceeded("time budget exceeded");
    }
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// ---- maximum independent set ----

struct AlphaSearch {
    const std::vector<Bits>& adj;
    Meter& meter;
    int best = -1;
    Bits best_set;

    // greedy clique cover of p: each clique contributes at most one vertex
    int clique_cover_bound(Bits p) const {
        int cliques = 0;
        while (p.any()) {
            int v = p.lowest();
            p.reset(v);
            Bits cand = p & adj[v];
            while (cand.any()) {
                int u = cand.lowest();
                p.reset(u);
                cand &= adj[u];
            }
            ++cliques;
        }
        return cliques;
    }

    void expand(const Bits& p, const Bits& cur, int cur_size) {
        meter.tick();
        if (p.none()) {
            if (cur_size > best) {
                best = cur_size;
                best_set = cur;
            }
            return;
        }
        int pcount = p.count();
        if (cur_size + pcount <= best) return;

        // branch vertex: maximum degree inside p, ties to the lowest index
        int bv = -1, bd = -1;
        for (int v = p.lowest(); v >= 0; v = p.next(v)) {
            int d = (adj[v] & p).count();
            if (d > bd) {
                bd = d;
                bv = v;
            }
        }
        if (bd == 0) {  // p is independent, take all of it
            if (cur_size + pcount > best) {
                best = cur_size + pcount;
                best_set = cur | p;
            }
            return;
        }
        if (cur_size + clique_cover_bound(p) <= best) return;

        Bits pin = p.minus(adj[bv]);
        pin.reset(bv);
        Bits cin = cur;
        cin.set(bv);
        expand(pin, cin, cur_size + 1);

        Bits pex = p;
        pex.reset(bv);
        expand(pex, cur, cur_size);
    }
};

SolveOutcome alpha_plain(const Graph& g, Meter& meter) {
    AlphaSearch s{g.adj, meter, -1, Bits{}};
    s.expand(g.vertex_mask(), Bits{}, 0);
    return {s.best, s.best_set};
}

// ---- minimum maximal independent set ----

struct IdomSearch {
    const std::vector<Bits>& closed;  // N[v]
    Meter& meter;
    int dplus1;
    int stop_at;  // lower bound; reaching it ends the search
    int best;
    Bits best_set;
    bool done = false;

    void expand(const Bits& chosen, int chosen_size, Bits avail, const Bits& undom) {
        meter.tick();
        if (undom.none()) {  // dominating and independent, hence maximal
            if (chosen_size < best) {
                best = chosen_size;
                best_set = chosen;
                if (best <= stop_at) done = true;
            }
            return;
        }
        if (chosen_size + ceil_div(undom.count(), dplus1) >= best) return;

        // some chosen vertex must dominate the lowest undominated one
        int u = undom.lowest();
        Bits cands = closed[u] & avail;
        for (int w = cands.lowest(); w >= 0; w = cands.next(w)) {
            Bits nc = chosen;
            nc.set(w);
            expand(nc, chosen_size + 1, avail.minus(closed[w]), undom.minus(closed[w]));
            if (done) return;
            avail.reset(w);  // refusing w binds the rest of this subtree
        }
    }
};

SolveOutcome idom_plain(const Graph& g, Meter& meter, int stop_at) {
    std::vector<Bits> closed(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) closed[v] = g.closed_neighborhood(v);
    IdomSearch run{closed, meter, g.max_degree() + 1, stop_at, g.vertex_count + 1, Bits{}, false};
    Bits all = g.vertex_mask();
    run.expand(Bits{}, 0, all, all);
    return {run.best, run.best_set};
}

// ---- per-component orchestration ----

struct ComponentView {
    Graph sub;
    std::vector<int> map;
    int berge = 0;  // Berge bound of the component itself
};

ComponentView component_view(const Graph& g, const Bits& comp) {
    ComponentView cv;
    auto [sub, map] = induced_subgraph(g, comp);
    cv.berge = berge_lower_bound(sub);
    cv.sub = std::move(sub);
    cv.map = std::move(map);
    return cv;
}

Bits map_back(const Bits& members, const std::vector<int>& map) {
    Bits out;
    for (int i = members.lowest(); i >= 0; i = members.next(i)) out.set(map[i]);
    return out;
}

// Solve one component.  For Cayley graphs the component is vertex-transitive,
// so it is solved on the subgraph left after deleting the closed
// neighborhood of its lowest vertex, and 1 is added back.
SolveOutcome component_alpha(const Graph& g, const Bits& comp, Meter& meter) {
    if (g.cayley) {
        int v = comp.lowest();
        Bits keep = comp.minus(g.closed_neighborhood(v));
        auto [sub, map] = induced_subgraph(g, keep);
        SolveOutcome inner = alpha_plain(sub, meter);
        Bits members = map_back(inner.members, map);
        members.set(v);
        return {inner.size + 1, members};
    }
    auto [sub, map] = induced_subgraph(g, comp);
    SolveOutcome inner = alpha_plain(sub, meter);
    return {inner.size, map_back(inner.members, map)};
}

SolveOutcome component_idom(const Graph& g, const Bits& comp, Meter& meter) {
    if (g.cayley) {
        ComponentView whole = component_view(g, comp);
        int v = comp.lowest();
        Bits keep = comp.minus(g.closed_neighborhood(v));
        auto [sub, map] = induced_subgraph(g, keep);
        int stop = std::max(berge_lower_bound(sub), whole.berge - 1);
        SolveOutcome inner = idom_plain(sub, meter, stop);
        Bits members = map_back(inner.members, map);
        members.set(v);
        return {inner.size + 1, members};
    }
    ComponentView cv = component_view(g, comp);
    SolveOutcome inner = idom_plain(cv.sub, meter, cv.berge);
    return {inner.size, map_back(inner.members, cv.map)};
}

using ComponentSolver = SolveOutcome (*)(const Graph&, const Bits&, Meter&);

SolveOutcome solve_by_components(const Graph& g, Meter& meter, ComponentSolver solve_one) {
    SolveOutcome total{0, Bits{}};
    int coset_size = -1;
    for (const Bits& comp : components_of(g)) {
        SolveOutcome part = solve_one(g, comp, meter);
        if (g.cayley) {
            if (coset_size < 0)
                coset_size = part.size;
            else if (coset_size != part.size)
                throw std::logic_error("coset components disagree on an invariant");
        }
        total.size += part.size;
        total.members |= part.members;
    }
    return total;
}

}  // namespace

int berge_lower_bound(const Graph& g) {
    if (g.vertex_count == 0) return 0;
    return ceil_div(g.vertex_count, g.max_degree() + 1);
}

SolveOutcome independence_number(const Graph& g, const SolveBudget& budget) {
    Meter meter(budget);
    return solve_by_components(g, meter, component_alpha);
}

SolveOutcome independent_domination_number(const Graph& g, const SolveBudget& budget) {
    Meter meter(budget);
    return solve_by_components(g, meter, component_idom);
}

ValuePair independence_values(const Graph& g, const SolveBudget& budget) {
    Meter meter(budget);
    auto comps = components_of(g);
    if (g.cayley && comps.size() > 1) {
        // coset copies are isomorphic: solve the first component, multiply
        int k = static_cast<int>(comps.size());
        int a = component_alpha(g, comps[0], meter).size;
        int i = component_idom(g, comps[0], meter).size;
        return {i * k, a * k};
    }
    ValuePair out;
    for (const Bits& comp : comps) {
        out.alpha += component_alpha(g, comp, meter).size;
        out.idom += component_idom(g, comp, meter).size;
    }
    return out;
}

EnumerationSummary enumerate_maximal_independent_sets(const Graph& g, const SolveBudget& budget,
                                                      const MisVisitor& visitor) {
    Meter meter(budget);
    int n = g.vertex_count;
    Bits all = g.vertex_mask();
    std::vector<Bits> nonadj(n);
    for (int v = 0; v < n; ++v) {
        nonadj[v] = all.minus(g.adj[v]);
        nonadj[v].reset(v);
    }

    EnumerationSummary sum;
    bool aborted = false;

    // maximal cliques of the complement = maximal independent sets of g
    auto bk = [&](auto&& self, const Bits& r, Bits p, Bits x, int rsize) -> void {
        if (aborted) return;
        meter.tick();
        if (p.none() && x.none()) {
            if (sum.count == 0) {
                sum.min_size = sum.max_size = rsize;
            } else {
                sum.min_size = std::min(sum.min_size, rsize);
                sum.max_size = std::max(sum.max_size, rsize);
            }
            ++sum.count;
            if (visitor && !visitor(r, rsize)) aborted = true;
            return;
        }
        Bits pux = p | x;
        int pivot = -1, bestdeg = -1;
        for (int u = pux.lowest(); u >= 0; u = pux.next(u)) {
            int d = (p & nonadj[u]).count();
            if (d > bestdeg) {
                bestdeg = d;
                pivot = u;
            }
        }
        Bits ext = p.minus(nonadj[pivot]);
        for (int v = ext.lowest(); v >= 0; v = ext.next(v)) {
            Bits nr = r;
            nr.set(v);
            self(self, nr, p & nonadj[v], x & nonadj[v], rsize + 1);
            if (aborted) return;
            p.reset(v);
            x.set(v);
        }
    };
    bk(bk, Bits{}, all, Bits{}, 0);
    return sum;
}

BruteAlphaI brute_force_alpha_i(const Graph& g) {
    int n = g.vertex_count;
    if (n > 24) throw Error(errc::too_large, "brute-force oracle is capped at 24 vertices");
    if (n == 0) return {0, 0};
    std::vector<std::uint32_t> adj(n), closed(n);
    for (int v = 0; v < n; ++v) {
        std::uint32_t row = 0;
        for (int u = 0; u < n; ++u)
            if (g.adjacent(v, u)) row |= 1u << u;
        adj[v] = row;
        closed[v] = row | (1u << v);
    }
    std::uint32_t full = (1u << n) - 1;
    int best_max = 0, best_min = n + 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t dom = 0;
        bool indep = true;
        for (std::uint32_t rest = mask; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[v] & mask) {
                indep = false;
                break;
            }
            dom |= closed[v];
        }
        if (!indep || dom != full) continue;
        int sz = std::popcount(mask);
        best_max = std::max(best_max, sz);
        best_min = std::min(best_min, sz);
    }
    return {best_max, best_min};
}

bool is_independent_set(const Graph& g, const Bits& s) {
    for (int v = s.lowest(); v >= 0; v = s.next(v))
        if (g.adj[v].intersects(s)) return false;
    return true;
}

bool is_dominating_set(const Graph& g, const Bits& s) {
    Bits covered = s;
    for (int v = s.lowest(); v >= 0; v = s.next(v)) covered |= g.adj[v];
    return g.vertex_mask().subset_of(covered);
}

bool is_maximal_independent_set(const Graph& g, const Bits& s) {
    return is_independent_set(g, s) && is_dominating_set(g, s);
}

}  // namespace sfactor
