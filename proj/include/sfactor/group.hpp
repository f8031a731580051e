#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sfactor/bits.hpp"

namespace sfactor {

enum class errc {
    not_square,
    bad_entry,
    missing_identity,
    not_latin_square,
    missing_inverse,
    not_associative,
    order_overflow,
    empty_set,
    bad_element,
    not_bijection,
    bad_action,
    not_subgroup,
    not_normal,
    subgroup_too_small,
    bad_quotient,
    bad_coset_rep,
    too_large,
    bad_format,
    unknown_group,
    unknown_label,
};

// Domain/usage error carrying a machine-checkable code.
class Error : public std::runtime_error {
  public:
    errc code;
    Error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

// Subset of group elements as a bit vector keyed by element index.
struct ElementSet {
    Bits bits;
    int width = 0;

    ElementSet() = default;
    explicit ElementSet(int n) : width(n) {}
    ElementSet(int n, std::initializer_list<int> elems) : width(n) {
        for (int e : elems) add(e);
    }

    static ElementSet full(int n) {
        ElementSet s(n);
        s.bits = Bits::first_n(n);
        return s;
    }

    int size() const { return bits.count(); }
    bool empty() const { return bits.none(); }
    bool contains(int i) const { return bits.test(i); }
    void add(int i) {
        if (i < 0 || i >= width) throw Error(errc::bad_element, "element index out of range");
        bits.set(i);
    }
    void remove(int i) { bits.reset(i); }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (int v = bits.lowest(); v >= 0; v = bits.next(v)) out.push_back(v);
        return out;
    }

    bool operator==(const ElementSet& o) const { return width == o.width && bits == o.bits; }
};

// Finite group as an explicit multiplication table.  The identity is always
// element 0; indices are dense 0..n-1 so subsets are flat bit vectors.
struct FiniteGroup {
    int order = 1;
    std::vector<std::uint8_t> table;     // order*order, table[a*order+b] = a*b
    std::vector<std::uint8_t> inverse;   // inverse[a]*a = a*inverse[a] = e
    std::vector<std::string> labels;
    std::string name;
    int identity = 0;

    int mul(int a, int b) const { return table[a * order + b]; }
    int inv(int a) const { return inverse[a]; }

    // a^k for any integer k (negative exponents via the inverse)
    int power(int a, long k) const {
        int base = k >= 0 ? a : inv(a);
        unsigned long e = k >= 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
        int r = identity;
        for (; e; --e) r = mul(r, base);
        return r;
    }

    const std::string& label(int a) const { return labels[a]; }

    // index of the element carrying this label, or error
    int element_by_label(const std::string& s) const;
};

// --- constructors ---

FiniteGroup make_cyclic(int n);

// Order 2n, generated by two involutions a (index n) and b (index 2n-1)
// with ab of order n.  Rotations (ab)^m sit at indices 0..n-1.
FiniteGroup make_dihedral(int n);

// Z_p^k; element index encodes the coordinate vector in base p, most
// significant digit first, so the i-th standard basis vector (1-based)
// is index p^(k-i).  Labels are digit strings like "010".
FiniteGroup make_elementary_abelian(int p, int k);

FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Breadth-first closure of permutations of {0..degree-1} under composition
// (p*q)(x) = p(q(x)).  Element 0 is the identity; numbering is BFS discovery
// order, deterministic for a fixed generator list.
FiniteGroup close_permutation_generators(int degree, const std::vector<std::vector<int>>& generators);

// N x| H with (n1,h1)(n2,h2) = (n1 * action[h1](n2), h1 h2); element (n,h)
// has index n*|H| + h.  Every action entry must be an automorphism of N and
// h -> action[h] a homomorphism; both are verified.
FiniteGroup make_semidirect(const FiniteGroup& n_part, const FiniteGroup& h_part,
                            const std::vector<std::vector<int>>& action);

// Full validation of an untrusted table: squareness, identity at index 0,
// Latin square, inverses, and the O(n^3) associativity check.
FiniteGroup validate_table(const std::vector<std::vector<int>>& raw,
                           std::vector<std::string> labels = {},
                           std::string name = "table");

// --- queries ---

int element_order(const FiniteGroup& g, int a);

// closure of s (plus the identity) under product and inverse
ElementSet subgroup_generated(const FiniteGroup& g, const ElementSet& s);

bool is_subgroup(const FiniteGroup& g, const ElementSet& h);
bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& h);

// right cosets Hg, ordered by ascending minimal element index
std::vector<ElementSet> coset_partition(const FiniteGroup& g, const ElementSet& h);

// {x*a : a in A}
ElementSet translate_left(const FiniteGroup& g, int x, const ElementSet& a);
// {a*y : a in A}
ElementSet translate_right(const FiniteGroup& g, const ElementSet& a, int y);
// {a^-1 : a in A}
ElementSet set_inverse(const FiniteGroup& g, const ElementSet& a);

// Group with the transposed table (a op b = b*a).  Right-handed computations
// there give the left-handed notions for g.
FiniteGroup opposite_group(const FiniteGroup& g);

// The subgroup h as a group of its own; second component maps the new dense
// indices back to elements of g (ascending, so the identity stays at 0).
std::pair<FiniteGroup, std::vector<int>> subgroup_as_group(const FiniteGroup& g, const ElementSet& h);

struct NormalFormGenerator {
    std::string name;
    int element = 0;
    int exponents = 1;  // exponent range 0..exponents-1
};

// Relabel every element by its normal form w.r.t. the given generators:
// exponent tuples are enumerated lexicographically and each element takes
// the product expression reaching it.  The ranges must tile the group
// exactly (every element hit once).
void relabel_normal_forms(FiniteGroup& g, const std::vector<NormalFormGenerator>& generators);

std::vector<std::string> set_labels(const FiniteGroup& g, const ElementSet& s);
std::string join_labels(const FiniteGroup& g, const ElementSet& s);

}  // namespace sfactor
