#include "sfactor/stability.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace sfactor {

namespace {

Bits products(const FiniteGroup& g, const ElementSet& a, int y) {
    Bits out;
    for (int x = a.bits.lowest(); x >= 0; x = a.bits.next(x)) out.set(g.mul(x, y));
    return out;
}

}  // namespace

bool sfactor_check(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
    if (a.empty() || b.empty()) throw Error(errc::empty_set, "s-factor check needs non-empty sets");
    // unique products: the sets Ay for y in B must be pairwise disjoint
    Bits ab;
    for (int y = b.bits.lowest(); y >= 0; y = b.bits.next(y)) {
        Bits ay = products(g, a, y);
        if (ay.intersects(ab)) return false;
        ab |= ay;
    }
    // maximality: adding any outside element must create a collision
    for (int y = 0; y < g.order; ++y)
        if (!b.contains(y) && !products(g, a, y).intersects(ab)) return false;
    return true;
}

IndexReport subset_indices(const FiniteGroup& g, const ElementSet& a, const SolveBudget& budget) {
    ElementSet s = boundary_set(g, a);
    Graph graph = cayley_graph(g, s);
    SolveOutcome large = independence_number(graph, budget);
    SolveOutcome small = independent_domination_number(graph, budget);

    IndexReport rep;
    rep.lower = small.size;
    rep.upper = large.size;
    rep.stable = rep.lower == rep.upper;
    rep.witness_small = ElementSet(g.order);
    rep.witness_small.bits = small.members;
    rep.witness_large = ElementSet(g.order);
    rep.witness_large.bits = large.members;
    if (!sfactor_check(g, a, rep.witness_small) || !sfactor_check(g, a, rep.witness_large))
        throw std::logic_error("solver witness failed the s-factor re-verification");
    return rep;
}

IndexReport left_subset_indices(const FiniteGroup& g, const ElementSet& a, const SolveBudget& budget) {
    return subset_indices(opposite_group(g), a, budget);
}

IndexReport brute_force_indices(const FiniteGroup& g, const ElementSet& a) {
    if (a.empty()) throw Error(errc::empty_set, "subset must be non-empty");
    if (g.order > 14) throw Error(errc::too_large, "brute-force index oracle is capped at order 14");
    int n = g.order;
    std::vector<Bits> col(n);
    for (int y = 0; y < n; ++y) col[y] = products(g, a, y);

    int best_lo = n + 1, best_hi = 0;
    std::uint32_t lo_mask = 0, hi_mask = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Bits ab;
        bool ok = true;
        for (std::uint32_t rest = mask; rest;) {
            int y = std::countr_zero(rest);
            rest &= rest - 1;
            if (col[y].intersects(ab)) {
                ok = false;
                break;
            }
            ab |= col[y];
        }
        if (!ok) continue;
        for (int y = 0; y < n && ok; ++y)
            if (!((mask >> y) & 1) && !col[y].intersects(ab)) ok = false;
        if (!ok) continue;
        int sz = std::popcount(mask);
        if (sz < best_lo) {
            best_lo = sz;
            lo_mask = mask;
        }
        if (sz > best_hi) {
            best_hi = sz;
            hi_mask = mask;
        }
    }

    IndexReport rep;
    rep.lower = best_lo;
    rep.upper = best_hi;
    rep.stable = best_lo == best_hi;
    rep.witness_small = ElementSet(n);
    rep.witness_large = ElementSet(n);
    for (int y = 0; y < n; ++y) {
        if ((lo_mask >> y) & 1) rep.witness_small.add(y);
        if ((hi_mask >> y) & 1) rep.witness_large.add(y);
    }
    return rep;
}

bool is_canonical_translate(const FiniteGroup& g, const ElementSet& a) {
    if (a.empty()) throw Error(errc::empty_set, "empty subset has no translation class");
    if (!a.contains(g.identity)) return false;  // some translate contains e and precedes a
    for (int x = 1; x < g.order; ++x) {
        ElementSet t = translate_left(g, x, a);
        if (Bits::lex_less(t.bits, a.bits)) return false;
    }
    return true;
}

ElementSet canonical_translate(const FiniteGroup& g, const ElementSet& a) {
    if (a.empty()) throw Error(errc::empty_set, "empty subset has no translation class");
    ElementSet best = a;
    for (int x = 1; x < g.order; ++x) {
        ElementSet t = translate_left(g, x, a);
        if (Bits::lex_less(t.bits, best.bits)) best = t;
    }
    return best;
}

namespace {

// Subsets containing the identity, ascending |A| then lexicographic on the
// element list.  Canonical representatives are a subsequence of this stream.
class SubsetStream {
  public:
    explicit SubsetStream(int order) : n_(order) {}

    bool next(Bits& out, std::uint64_t& ordinal) {
        if (size_ > n_) return false;
        out = Bits::single(0);
        for (int v : combo_) out.set(v);
        ordinal = ordinal_++;
        advance();
        return true;
    }

  private:
    void advance() {
        int m = static_cast<int>(combo_.size());
        for (int i = m - 1; i >= 0; --i) {
            if (combo_[i] < n_ - 1 - (m - 1 - i)) {
                ++combo_[i];
                for (int j = i + 1; j < m; ++j) combo_[j] = combo_[j - 1] + 1;
                return;
            }
        }
        ++size_;  // first combination of the next size: {1, 2, ..., size-1}
        combo_.resize(size_ - 1);
        for (int j = 0; j < size_ - 1; ++j) combo_[j] = j + 1;
        if (size_ - 1 > n_ - 1) size_ = n_ + 1;
    }

    int n_;
    int size_ = 1;
    std::vector<int> combo_;
    std::uint64_t ordinal_ = 0;
};

constexpr std::uint64_t kNoEvent = UINT64_MAX;

struct ScanState {
    const FiniteGroup& group;
    SolveBudget budget;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    std::mutex stream_mutex;
    SubsetStream stream;
    bool timed_out = false;

    std::atomic<std::uint64_t> first_event{kNoEvent};
    std::atomic<std::uint64_t> canonical_seen{0};

    std::mutex error_mutex;
    std::exception_ptr error;

    ScanState(const FiniteGroup& g, const SolveBudget& b)
        : group(g), budget(b), stream(g.order) {
        if (b.time_limit) deadline = std::chrono::steady_clock::now() + *b.time_limit;
    }
};

struct ScanItem {
    std::uint64_t ordinal;
    Bits bits;
};

bool pull_chunk(ScanState& st, std::vector<ScanItem>& chunk) {
    constexpr int kChunk = 64;
    chunk.clear();
    std::lock_guard<std::mutex> lock(st.stream_mutex);
    if (st.timed_out) return false;
    if (st.deadline && std::chrono::steady_clock::now() > *st.deadline) {
        st.timed_out = true;
        return false;
    }
    std::uint64_t cutoff = st.first_event.load(std::memory_order_relaxed);
    for (int i = 0; i < kChunk; ++i) {
        ScanItem item;
        if (!st.stream.next(item.bits, item.ordinal)) break;
        if (item.ordinal > cutoff) return !chunk.empty();
        chunk.push_back(item);
    }
    return !chunk.empty();
}

void record_event(ScanState& st, std::uint64_t ordinal) {
    std::uint64_t cur = st.first_event.load();
    while (ordinal < cur && !st.first_event.compare_exchange_weak(cur, ordinal)) {
    }
}

// Evaluate one representative; returns true when it witnesses instability.
// Both trivially-stable shapes are skipped: |A| = 1 (edgeless graph) and
// boundary = G \ {e} (complete graph).
bool representative_unstable(const FiniteGroup& g, const ElementSet& a, const SolveBudget& budget) {
    if (a.size() == 1) return false;
    ElementSet s = boundary_set(g, a);
    if (s.size() == g.order - 1) return false;
    ValuePair values = independence_values(cayley_graph(g, s), budget);
    return values.idom < values.alpha;
}

void scan_worker(ScanState& st) {
    std::vector<ScanItem> chunk;
    try {
        while (pull_chunk(st, chunk)) {
            for (const ScanItem& item : chunk) {
                if (item.ordinal > st.first_event.load(std::memory_order_relaxed)) break;
                ElementSet a(st.group.order);
                a.bits = item.bits;
                if (!is_canonical_translate(st.group, a)) continue;
                st.canonical_seen.fetch_add(1, std::memory_order_relaxed);
                SolveBudget per_rep{st.budget.node_limit, std::nullopt};
                try {
                    if (representative_unstable(st.group, a, per_rep)) record_event(st, item.ordinal);
                } catch (const BudgetExceeded&) {
                    record_event(st, item.ordinal);
                }
            }
        }
    } catch (...) {
        std::lock_guard<std::mutex> lock(st.error_mutex);
        if (!st.error) st.error = std::current_exception();
    }
}

// Serial replay up to the event ordinal: recounts the canonical
// representatives (the parallel counter stops being meaningful once workers
// cut out early) and returns the event subset.
ElementSet replay_to(const FiniteGroup& g, std::uint64_t event, std::uint64_t& examined) {
    SubsetStream stream(g.order);
    examined = 0;
    Bits bits;
    std::uint64_t ordinal = 0;
    while (stream.next(bits, ordinal)) {
        ElementSet a(g.order);
        a.bits = bits;
        if (!is_canonical_translate(g, a)) continue;
        ++examined;
        if (ordinal == event) return a;
    }
    throw std::logic_error("scan event ordinal is not a representative");
}

}  // namespace

std::vector<ElementSet> translation_class_representatives(const FiniteGroup& g) {
    if (g.order > 20)
        throw Error(errc::too_large, "representative materialization is capped at order 20");
    std::vector<ElementSet> out;
    SubsetStream stream(g.order);
    Bits bits;
    std::uint64_t ordinal = 0;
    while (stream.next(bits, ordinal)) {
        ElementSet a(g.order);
        a.bits = bits;
        if (is_canonical_translate(g, a)) out.push_back(std::move(a));
    }
    return out;
}

StabilityReport is_stable_group(const FiniteGroup& g, const SolveBudget& budget, const ScanOptions& opts) {
    StabilityReport rep;
    rep.group_name = g.name;

    bool exhaustive = g.order <= 16 || opts.exhaustive;
    if (exhaustive && g.order > 32)
        throw Error(errc::too_large, "exhaustive stability scan is capped at order 32");

    if (!exhaustive) {
        if (opts.designated_witness) {
            IndexReport ir = subset_indices(g, *opts.designated_witness, budget);
            rep.subsets_examined = 1;
            if (!ir.stable) {
                rep.verdict = Verdict::unstable;
                rep.witness_subset = *opts.designated_witness;
                rep.witness_lower = ir.lower;
                rep.witness_upper = ir.upper;
            } else {
                rep.verdict = Verdict::inconclusive;
            }
        } else {
            rep.verdict = Verdict::inconclusive;
        }
        return rep;
    }

    ScanState state(g, budget);
    int workers = std::max(1, opts.workers);
    if (workers == 1) {
        scan_worker(state);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(scan_worker, std::ref(state));
        for (auto& t : pool) t.join();
    }
    if (state.error) std::rethrow_exception(state.error);

    std::uint64_t event = state.first_event.load();
    if (event == kNoEvent) {
        if (state.timed_out) throw BudgetExceeded("time budget exceeded during the stability scan");
        rep.verdict = Verdict::stable;
        rep.subsets_examined = state.canonical_seen.load();
        return rep;
    }

    std::uint64_t examined = 0;
    ElementSet witness = replay_to(g, event, examined);
    // re-solve the event deterministically: either the budget trips again or
    // the subset is a genuine instability witness
    SolveBudget per_rep{budget.node_limit, std::nullopt};
    if (!representative_unstable(g, witness, per_rep))
        throw std::logic_error("scan event did not reproduce");
    IndexReport ir = subset_indices(g, witness, SolveBudget::unlimited());
    rep.verdict = Verdict::unstable;
    rep.witness_subset = witness;
    rep.witness_lower = ir.lower;
    rep.witness_upper = ir.upper;
    rep.subsets_examined = examined;
    return rep;
}

}  // namespace sfactor
