#include "sfactor/group.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace sfactor {

namespace {

void check_order_fits(long n) {
    if (n < 1) throw Error(errc::bad_entry, "group order must be positive");
    if (n > Bits::max_bits)
        throw Error(errc::order_overflow,
                    "group order " + std::to_string(n) + " exceeds the configured limit " +
                        std::to_string(Bits::max_bits));
}

FiniteGroup blank_group(int n, std::string name) {
    FiniteGroup g;
    g.order = n;
    g.table.assign(static_cast<size_t>(n) * n, 0);
    g.inverse.assign(n, 0);
    g.labels.resize(n);
    g.name = std::move(name);
    return g;
}

void fill_inverses(FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a) {
        bool found = false;
        for (int b = 0; b < g.order; ++b) {
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
                g.inverse[a] = static_cast<std::uint8_t>(b);
                found = true;
                break;
            }
        }
        if (!found) throw Error(errc::missing_inverse, "element " + std::to_string(a) + " has no inverse");
    }
}

}  // namespace

int FiniteGroup::element_by_label(const std::string& s) const {
    for (int i = 0; i < order; ++i)
        if (labels[i] == s) return i;
    throw Error(errc::unknown_label, "no element labeled '" + s + "' in group " + name);
}

FiniteGroup make_cyclic(int n) {
    if (n < 1) throw Error(errc::bad_entry, "cyclic group needs n >= 1");
    check_order_fits(n);
    FiniteGroup g = blank_group(n, "cyclic:" + std::to_string(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) g.table[a * n + b] = static_cast<std::uint8_t>((a + b) % n);
        g.inverse[a] = static_cast<std::uint8_t>((n - a) % n);
        g.labels[a] = std::to_string(a);
    }
    return g;
}

FiniteGroup make_dihedral(int n) {
    if (n < 3) throw Error(errc::bad_entry, "dihedral group needs n >= 3");
    check_order_fits(2L * n);
    // indices 0..n-1: rotations x -> x+m; indices n..2n-1: reflections x -> -x+m
    FiniteGroup g = blank_group(2 * n, "dihedral:" + std::to_string(n));
    auto rot = [n](int m) { return ((m % n) + n) % n; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g.table[i * 2 * n + j] = static_cast<std::uint8_t>(rot(i + j));
            g.table[i * 2 * n + (n + j)] = static_cast<std::uint8_t>(n + rot(i + j));
            g.table[(n + i) * 2 * n + j] = static_cast<std::uint8_t>(n + rot(i - j));
            g.table[(n + i) * 2 * n + (n + j)] = static_cast<std::uint8_t>(rot(i - j));
        }
    }
    fill_inverses(g);
    // a = reflection 0 (index n), b = reflection n-1 (index 2n-1): a*b is the
    // rotation by 1, so <a,b> realizes a^2=b^2=(ab)^n=e.  Labels are the
    // shortest alternating words in a and b.
    int a = n, b = 2 * n - 1;
    std::vector<bool> labeled(2 * n, false);
    g.labels[0] = "e";
    labeled[0] = true;
    int remaining = 2 * n - 1;
    for (int len = 1; remaining > 0 && len <= 2 * n; ++len) {
        for (int first : {a, b}) {
            int second = first == a ? b : a;
            int cur = 0;
            std::string word;
            for (int k = 0; k < len; ++k) {
                int gen = (k % 2 == 0) ? first : second;
                cur = g.mul(cur, gen);
                word += (gen == a) ? 'a' : 'b';
            }
            if (!labeled[cur]) {
                g.labels[cur] = word;
                labeled[cur] = true;
                --remaining;
            }
        }
    }
    return g;
}

FiniteGroup make_elementary_abelian(int p, int k) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw Error(errc::bad_entry, "elementary abelian group supports p in {2,3,5,7}");
    if (k < 1) throw Error(errc::bad_entry, "elementary abelian group needs k >= 1");
    long n = 1;
    for (int i = 0; i < k; ++i) {
        n *= p;
        check_order_fits(n);
    }
    FiniteGroup g = blank_group(static_cast<int>(n), "elementary:" + std::to_string(p) + ":" + std::to_string(k));
    auto digits = [&](int x) {
        std::vector<int> d(k);
        for (int i = k - 1; i >= 0; --i) {
            d[i] = x % p;
            x /= p;
        }
        return d;
    };
    for (int a = 0; a < n; ++a) {
        auto da = digits(a);
        std::string lab;
        for (int i = 0; i < k; ++i) lab += static_cast<char>('0' + da[i]);
        g.labels[a] = lab;
        int ainv = 0;
        for (int i = 0; i < k; ++i) ainv = ainv * p + (p - da[i]) % p;
        g.inverse[a] = static_cast<std::uint8_t>(ainv);
        for (int b = 0; b < n; ++b) {
            auto db = digits(b);
            int c = 0;
            for (int i = 0; i < k; ++i) c = c * p + (da[i] + db[i]) % p;
            g.table[a * n + b] = static_cast<std::uint8_t>(c);
        }
    }
    return g;
}

FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    long n = static_cast<long>(g.order) * h.order;
    check_order_fits(n);
    FiniteGroup p = blank_group(static_cast<int>(n), g.name + "*" + h.name);
    auto idx = [&](int x, int y) { return x * h.order + y; };
    for (int x1 = 0; x1 < g.order; ++x1)
        for (int y1 = 0; y1 < h.order; ++y1) {
            int a = idx(x1, y1);
            p.labels[a] = "(" + g.labels[x1] + "," + h.labels[y1] + ")";
            p.inverse[a] = static_cast<std::uint8_t>(idx(g.inv(x1), h.inv(y1)));
            for (int x2 = 0; x2 < g.order; ++x2)
                for (int y2 = 0; y2 < h.order; ++y2)
                    p.table[a * n + idx(x2, y2)] =
                        static_cast<std::uint8_t>(idx(g.mul(x1, x2), h.mul(y1, y2)));
        }
    return p;
}

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
    int d = static_cast<int>(perm.size());
    std::vector<bool> seen(d, false);
    std::string out;
    for (int s = 0; s < d; ++s) {
        if (seen[s] || perm[s] == s) continue;
        out += '(';
        int x = s;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first && d > 10) out += ' ';
            first = false;
            out += std::to_string(x);
            x = perm[x];
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup close_permutation_generators(int degree, const std::vector<std::vector<int>>& generators) {
    if (degree < 1) throw Error(errc::bad_entry, "permutation degree must be positive");
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree)
            throw Error(errc::not_bijection, "generator has wrong degree");
        std::vector<bool> hit(degree, false);
        for (int v : p) {
            if (v < 0 || v >= degree || hit[v])
                throw Error(errc::not_bijection, "generator is not a permutation");
            hit[v] = true;
        }
    }
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;

    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gen : generators) {
            std::vector<int> q(degree);
            for (int x = 0; x < degree; ++x) q[x] = elems[head][gen[x]];  // (p*g)(x) = p(g(x))
            if (index.emplace(q, static_cast<int>(elems.size())).second) {
                if (static_cast<int>(elems.size()) >= Bits::max_bits)
                    throw Error(errc::order_overflow, "permutation closure exceeds the configured limit");
                elems.push_back(std::move(q));
            }
        }
    }

    int n = static_cast<int>(elems.size());
    FiniteGroup g = blank_group(n, "perm-closure");
    for (int a = 0; a < n; ++a) {
        g.labels[a] = cycle_notation(elems[a]);
        for (int b = 0; b < n; ++b) {
            std::vector<int> q(degree);
            for (int x = 0; x < degree; ++x) q[x] = elems[a][elems[b][x]];
            auto it = index.find(q);
            if (it == index.end())
                throw Error(errc::not_bijection, "closure is not product-closed");  // unreachable
            g.table[a * n + b] = static_cast<std::uint8_t>(it->second);
        }
    }
    fill_inverses(g);
    return g;
}

FiniteGroup make_semidirect(const FiniteGroup& n_part, const FiniteGroup& h_part,
                            const std::vector<std::vector<int>>& action) {
    int nn = n_part.order, nh = h_part.order;
    if (static_cast<int>(action.size()) != nh)
        throw Error(errc::bad_action, "action must have one entry per element of H");
    for (int h = 0; h < nh; ++h) {
        const auto& f = action[h];
        if (static_cast<int>(f.size()) != nn) throw Error(errc::bad_action, "action entry has wrong size");
        std::vector<bool> hit(nn, false);
        for (int v : f) {
            if (v < 0 || v >= nn || hit[v]) throw Error(errc::bad_action, "action entry is not a bijection");
            hit[v] = true;
        }
        for (int x = 0; x < nn; ++x)
            for (int y = 0; y < nn; ++y)
                if (f[n_part.mul(x, y)] != n_part.mul(f[x], f[y]))
                    throw Error(errc::bad_action,
                                "action entry for h=" + std::to_string(h) + " is not an automorphism");
    }
    for (int x = 0; x < nn; ++x)
        if (action[0][x] != x) throw Error(errc::bad_action, "identity of H must act trivially");
    for (int h1 = 0; h1 < nh; ++h1)
        for (int h2 = 0; h2 < nh; ++h2) {
            const auto& composed = action[h_part.mul(h1, h2)];
            for (int x = 0; x < nn; ++x)
                if (composed[x] != action[h1][action[h2][x]])
                    throw Error(errc::bad_action, "action is not a homomorphism from H");
        }

    long n = static_cast<long>(nn) * nh;
    check_order_fits(n);
    FiniteGroup g = blank_group(static_cast<int>(n), n_part.name + ":|" + h_part.name);
    auto idx = [&](int x, int h) { return x * nh + h; };
    for (int x1 = 0; x1 < nn; ++x1)
        for (int h1 = 0; h1 < nh; ++h1) {
            int a = idx(x1, h1);
            g.labels[a] = "(" + n_part.labels[x1] + "," + h_part.labels[h1] + ")";
            for (int x2 = 0; x2 < nn; ++x2)
                for (int h2 = 0; h2 < nh; ++h2)
                    g.table[a * n + idx(x2, h2)] = static_cast<std::uint8_t>(
                        idx(n_part.mul(x1, action[h1][x2]), h_part.mul(h1, h2)));
        }
    fill_inverses(g);
    return g;
}

FiniteGroup validate_table(const std::vector<std::vector<int>>& raw, std::vector<std::string> labels,
                           std::string name) {
    int n = static_cast<int>(raw.size());
    check_order_fits(n);
    for (const auto& row : raw)
        if (static_cast<int>(row.size()) != n) throw Error(errc::not_square, "table is not square");
    for (const auto& row : raw)
        for (int v : row)
            if (v < 0 || v >= n) throw Error(errc::bad_entry, "table entry out of range");

    for (int a = 0; a < n; ++a)
        if (raw[0][a] != a || raw[a][0] != a)
            throw Error(errc::missing_identity, "element 0 is not a two-sided identity");

    for (int a = 0; a < n; ++a) {
        std::vector<bool> row_hit(n, false), col_hit(n, false);
        for (int b = 0; b < n; ++b) {
            if (row_hit[raw[a][b]] || col_hit[raw[b][a]])
                throw Error(errc::not_latin_square, "row or column " + std::to_string(a) +
                                                        " is not a permutation");
            row_hit[raw[a][b]] = true;
            col_hit[raw[b][a]] = true;
        }
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (raw[raw[a][b]][c] != raw[a][raw[b][c]])
                    throw Error(errc::not_associative, "table is not associative");

    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b) found = raw[a][b] == 0 && raw[b][a] == 0;
        if (!found) throw Error(errc::missing_inverse, "element " + std::to_string(a) + " has no inverse");
    }

    FiniteGroup g = blank_group(n, std::move(name));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[a * n + b] = static_cast<std::uint8_t>(raw[a][b]);
    fill_inverses(g);
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw Error(errc::bad_format, "label count does not match the order");
        g.labels = std::move(labels);
    } else {
        for (int a = 0; a < n; ++a) g.labels[a] = std::to_string(a);
    }
    return g;
}

int element_order(const FiniteGroup& g, int a) {
    if (a < 0 || a >= g.order) throw Error(errc::bad_element, "element index out of range");
    int k = 1, x = a;
    while (x != g.identity) {
        x = g.mul(x, a);
        ++k;
    }
    return k;
}

ElementSet subgroup_generated(const FiniteGroup& g, const ElementSet& s) {
    ElementSet h(g.order);
    h.add(g.identity);
    std::vector<int> work{g.identity};
    for (int v = s.bits.lowest(); v >= 0; v = s.bits.next(v)) {
        if (!h.contains(v)) {
            h.add(v);
            work.push_back(v);
        }
    }
    // product closure; a finite product-closed set containing e is a subgroup
    for (size_t i = 0; i < work.size(); ++i) {
        for (size_t j = 0; j < work.size(); ++j) {
            for (int prod : {g.mul(work[i], work[j]), g.mul(work[j], work[i])}) {
                if (!h.contains(prod)) {
                    h.add(prod);
                    work.push_back(prod);
                }
            }
        }
    }
    return h;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& h) {
    if (!h.contains(g.identity)) return false;
    for (int a = h.bits.lowest(); a >= 0; a = h.bits.next(a)) {
        if (!h.contains(g.inv(a))) return false;
        for (int b = h.bits.lowest(); b >= 0; b = h.bits.next(b))
            if (!h.contains(g.mul(a, b))) return false;
    }
    return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& h) {
    if (!is_subgroup(g, h)) return false;
    for (int x = 0; x < g.order; ++x)
        for (int a = h.bits.lowest(); a >= 0; a = h.bits.next(a))
            if (!h.contains(g.mul(g.mul(x, a), g.inv(x)))) return false;
    return true;
}

std::vector<ElementSet> coset_partition(const FiniteGroup& g, const ElementSet& h) {
    if (!is_subgroup(g, h)) throw Error(errc::not_subgroup, "coset partition needs a subgroup");
    std::vector<ElementSet> out;
    Bits seen;
    for (int x = 0; x < g.order; ++x) {
        if (seen.test(x)) continue;
        ElementSet coset(g.order);
        for (int a = h.bits.lowest(); a >= 0; a = h.bits.next(a)) coset.add(g.mul(a, x));
        seen |= coset.bits;
        out.push_back(std::move(coset));
    }
    return out;
}

ElementSet translate_left(const FiniteGroup& g, int x, const ElementSet& a) {
    ElementSet out(g.order);
    for (int v = a.bits.lowest(); v >= 0; v = a.bits.next(v)) out.add(g.mul(x, v));
    return out;
}

ElementSet translate_right(const FiniteGroup& g, const ElementSet& a, int y) {
    ElementSet out(g.order);
    for (int v = a.bits.lowest(); v >= 0; v = a.bits.next(v)) out.add(g.mul(v, y));
    return out;
}

ElementSet set_inverse(const FiniteGroup& g, const ElementSet& a) {
    ElementSet out(g.order);
    for (int v = a.bits.lowest(); v >= 0; v = a.bits.next(v)) out.add(g.inv(v));
    return out;
}

FiniteGroup opposite_group(const FiniteGroup& g) {
    FiniteGroup op = g;
    op.name = g.name + "^op";
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) op.table[a * g.order + b] = g.table[b * g.order + a];
    return op;
}

std::pair<FiniteGroup, std::vector<int>> subgroup_as_group(const FiniteGroup& g, const ElementSet& h) {
    if (!is_subgroup(g, h)) throw Error(errc::not_subgroup, "not a subgroup");
    std::vector<int> to_parent = h.elements();
    int m = static_cast<int>(to_parent.size());
    std::vector<int> pos(g.order, -1);
    for (int i = 0; i < m; ++i) pos[to_parent[i]] = i;
    FiniteGroup sub = blank_group(m, "sub<" + g.name + ">");
    for (int i = 0; i < m; ++i) {
        sub.labels[i] = g.labels[to_parent[i]];
        for (int j = 0; j < m; ++j)
            sub.table[i * m + j] = static_cast<std::uint8_t>(pos[g.mul(to_parent[i], to_parent[j])]);
    }
    fill_inverses(sub);
    return {std::move(sub), std::move(to_parent)};
}

void relabel_normal_forms(FiniteGroup& g, const std::vector<NormalFormGenerator>& generators) {
    long combos = 1;
    for (const auto& gen : generators) combos *= gen.exponents;
    if (combos != g.order)
        throw std::logic_error("normal form pattern does not match the group order");

    std::vector<std::string> fresh(g.order);
    std::vector<bool> hit(g.order, false);
    std::vector<int> exps(generators.size(), 0);
    for (long t = 0; t < combos; ++t) {
        int prod = g.identity;
        std::string lab;
        for (size_t i = 0; i < generators.size(); ++i) {
            if (exps[i] == 0) continue;
            prod = g.mul(prod, g.power(generators[i].element, exps[i]));
            if (!lab.empty()) lab += '*';
            lab += generators[i].name;
            if (exps[i] > 1) lab += '^' + std::to_string(exps[i]);
        }
        if (hit[prod]) throw std::logic_error("normal form pattern is not a bijection");
        hit[prod] = true;
        fresh[prod] = lab.empty() ? "e" : lab;
        for (int i = static_cast<int>(exps.size()) - 1; i >= 0; --i) {
            if (++exps[i] < generators[i].exponents) break;
            exps[i] = 0;
        }
    }
    g.labels = std::move(fresh);
}

std::vector<std::string> set_labels(const FiniteGroup& g, const ElementSet& s) {
    std::vector<std::string> out;
    for (int v = s.bits.lowest(); v >= 0; v = s.bits.next(v)) out.push_back(g.labels[v]);
    return out;
}

std::string join_labels(const FiniteGroup& g, const ElementSet& s) {
    std::string out;
    for (int v = s.bits.lowest(); v >= 0; v = s.bits.next(v)) {
        if (!out.empty()) out += ',';
        out += g.labels[v];
    }
    return out.empty() ? "{}" : out;
}

}  // namespace sfactor
