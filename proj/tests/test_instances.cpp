// Fixed connection sets and deleted-neighborhood vertex sets of the directly
// computed instances, pinned element by element.

#include <algorithm>

#include "doctest.h"
#include "sfactor/graph.hpp"
#include "test_support.hpp"

using namespace sfactor;
using namespace sfactor::test;

namespace {

std::vector<std::string> sorted_labels(const FiniteGroup& g, const ElementSet& s) {
    std::vector<std::string> out = set_labels(g, s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

ElementSet outside_closed_neighborhood(const FiniteGroup& g, const ElementSet& a) {
    ElementSet s = boundary_set(g, a);
    ElementSet rest(g.order);
    rest.bits = Bits::first_n(g.order).minus(s.bits);
    rest.remove(g.identity);
    return rest;
}

}  // namespace

TEST_CASE("connection set of the order-21 instance") {
    NamedGroup ng = make_named_group("c7_rtimes_c3");
    const FiniteGroup& g = ng.group;
    ElementSet s = boundary_set(g, *ng.designated_subset);
    // {a, a^-1, b, b^-1, a^-1 b, b^-1 a}
    int a = g.element_by_label("a"), b = g.element_by_label("b");
    ElementSet expect(g.order);
    expect.add(a);
    expect.add(g.inv(a));
    expect.add(b);
    expect.add(g.inv(b));
    expect.add(g.mul(g.inv(a), b));
    expect.add(g.mul(g.inv(b), a));
    CHECK(s == expect);
    CHECK(s.size() == 6);
}

TEST_CASE("connection set of the order-12 instance") {
    NamedGroup ng = make_named_group("alt4");
    const FiniteGroup& g = ng.group;
    // {b, t, t^2, tab, t^2 b}
    CHECK(sorted_labels(g, boundary_set(g, *ng.designated_subset)) ==
          sorted({"b", "t", "t^2", "t*a*b", "t^2*b"}));
}

TEST_CASE("connection set of the order-18 instance") {
    NamedGroup ng = make_named_group("c3c3_rtimes_c2");
    const FiniteGroup& g = ng.group;
    // {a, a^2, b, b^2, t, bt, a^2 t, a^2 b t}
    CHECK(sorted_labels(g, boundary_set(g, *ng.designated_subset)) ==
          sorted({"a", "a^2", "b", "b^2", "t", "b*t", "a^2*t", "a^2*b*t"}));
}

TEST_CASE("connection sets of the elementary abelian instances") {
    NamedGroup z25 = make_named_group("elementary:2:5");
    ElementSet s25 = boundary_set(z25.group, *z25.designated_subset);
    // all vectors of weight 1 or 2
    CHECK(s25.size() == 15);
    for (int v = 0; v < 32; ++v) {
        int weight = std::popcount(static_cast<unsigned>(v));
        CHECK(s25.contains(v) == (weight == 1 || weight == 2));
    }

    NamedGroup z33 = make_named_group("elementary:3:3");
    const FiniteGroup& g = z33.group;
    ElementSet s33 = boundary_set(g, *z33.designated_subset);
    // {+-e_i, +-(e_i - e_j)}
    ElementSet expect(g.order);
    int basis[3] = {9, 3, 1};
    for (int i = 0; i < 3; ++i) {
        expect.add(basis[i]);
        expect.add(g.inv(basis[i]));
        for (int j = 0; j < 3; ++j)
            if (i != j) expect.add(g.mul(basis[i], g.inv(basis[j])));
    }
    CHECK(s33 == expect);
    CHECK(s33.size() == 12);
}

TEST_CASE("connection sets and outside vertices of the order-16 instances") {
    {
        NamedGroup ng = make_named_group("order16_id11");
        const FiniteGroup& g = ng.group;
        CHECK(sorted_labels(g, boundary_set(g, *ng.designated_subset)) ==
              sorted({"a", "a^3", "a^3*b", "b", "a*c", "a^3*c", "b*c", "c"}));
        CHECK(sorted_labels(g, outside_closed_neighborhood(g, *ng.designated_subset)) ==
              sorted({"a^2", "a^2*b", "a*b", "a^2*c", "a*b*c", "a^2*b*c", "a^3*b*c"}));
    }
    {
        NamedGroup ng = make_named_group("order16_id12");
        const FiniteGroup& g = ng.group;
        // b^3 = a^2 b and b^3 a = a b in the a^i b^j c^k normal form
        CHECK(sorted_labels(g, boundary_set(g, *ng.designated_subset)) ==
              sorted({"a", "b", "a^3", "a^2*b", "a^3*b", "a*b", "c", "a*c", "b*c", "a^3*c", "a^2*b*c"}));
        CHECK(sorted_labels(g, outside_closed_neighborhood(g, *ng.designated_subset)) ==
              sorted({"a^2", "a^2*c", "a*b*c", "a^3*b*c"}));
    }
    {
        NamedGroup ng = make_named_group("order16_id13");
        const FiniteGroup& g = ng.group;
        CHECK(sorted_labels(g, boundary_set(g, *ng.designated_subset)) ==
              sorted({"a", "a^3", "a*b", "a^3*b", "b", "c", "a*c", "a^3*c", "b*c", "a^2*b*c"}));
        CHECK(sorted_labels(g, outside_closed_neighborhood(g, *ng.designated_subset)) ==
              sorted({"a^2", "a^2*b", "a^2*c", "a*b*c", "a^3*b*c"}));
    }
}

TEST_CASE("closed neighborhood of the identity in the order-21 graph") {
    NamedGroup ng = make_named_group("c7_rtimes_c3");
    const FiniteGroup& g = ng.group;
    Graph graph = cayley_graph(g, boundary_set(g, *ng.designated_subset));
    ElementSet nbhd(g.order);
    nbhd.bits = graph.adj[0];
    // {a, a^6, b, b a^3, b^2, b^2 a}; with ba = a^2 b the mixed words
    // normalize to b a^3 = a^6 b and b^2 a = a^4 b^2
    CHECK(sorted_labels(g, nbhd) == sorted({"a", "a^6", "b", "a^6*b", "b^2", "a^4*b^2"}));
}

TEST_CASE("minimum generating patterns of the stable nonabelian groups") {
    // A = {e,x,y} with both generators of order > 2: A^-1 A has 7 elements
    FiniteGroup q8 = make_quaternion8();
    int x = q8.element_by_label("a"), y = q8.element_by_label("b");
    ElementSet a(q8.order, {0});
    a.add(x);
    a.add(y);
    ElementSet s = boundary_set(q8, a);
    CHECK(s.size() == 6);
    ElementSet outside = outside_closed_neighborhood(q8, a);
    CHECK(outside.size() == 1);
    CHECK(outside.contains(q8.element_by_label("a^2")));
}
