#include <sstream>

#include "doctest.h"
#include "sfactor/graph.hpp"
#include "sfactor/table_io.hpp"
#include "test_support.hpp"

using namespace sfactor;
using namespace sfactor::test;

TEST_CASE("cyclic groups") {
    FiniteGroup c1 = make_cyclic(1);
    CHECK(c1.order == 1);
    CHECK(c1.identity == 0);

    FiniteGroup c7 = make_cyclic(7);
    for (int a = 1; a < 7; ++a) CHECK(element_order(c7, a) == 7);

    FiniteGroup c6 = make_cyclic(6);
    CHECK(element_order(c6, 2) == 3);
    CHECK(element_order(c6, 3) == 2);
    CHECK(c6.mul(4, 5) == 3);
    CHECK(c6.labels[4] == "4");

    CHECK_THROWS_AS(make_cyclic(0), Error);
}

TEST_CASE("dihedral groups") {
    CHECK_THROWS_AS(make_dihedral(2), Error);

    FiniteGroup d3 = make_dihedral(3);
    CHECK(d3.order == 6);
    CHECK(!is_abelian(d3));
    // S3 fingerprint: identity, three involutions, two 3-cycles
    CHECK(order_profile(d3) == std::vector<int>{0, 1, 3, 2, 0, 0, 0});

    FiniteGroup d4 = make_dihedral(4);
    int central = 0;
    for (int a = 0; a < d4.order; ++a) {
        bool commutes = true;
        for (int b = 0; b < d4.order; ++b) commutes = commutes && d4.mul(a, b) == d4.mul(b, a);
        central += commutes;
    }
    CHECK(central == 2);

    FiniteGroup d7 = make_dihedral(7);
    CHECK(d7.order == 14);
    int a = 7, b = 13;  // generator indices for n = 7
    CHECK(element_order(d7, a) == 2);
    CHECK(element_order(d7, b) == 2);
    CHECK(element_order(d7, d7.mul(a, b)) == 7);
    CHECK(d7.labels[a] == "a");
    CHECK(d7.labels[b] == "b");
}

TEST_CASE("elementary abelian groups") {
    FiniteGroup z25 = make_elementary_abelian(2, 5);
    CHECK(z25.order == 32);
    for (int a = 1; a < 32; ++a) CHECK(element_order(z25, a) == 2);

    FiniteGroup z33 = make_elementary_abelian(3, 3);
    CHECK(z33.order == 27);
    for (int a = 1; a < 27; ++a) CHECK(element_order(z33, a) == 3);
    CHECK(z33.labels[9 + 3] == "110");

    FiniteGroup c2 = make_elementary_abelian(2, 1);
    CHECK(c2.order == 2);

    CHECK_THROWS_AS(make_elementary_abelian(11, 1), Error);
    CHECK_THROWS_AS(make_elementary_abelian(2, 8), Error);  // 256 over the vertex width
}

TEST_CASE("direct products") {
    FiniteGroup p = make_direct_product(make_cyclic(2), make_cyclic(4));
    CHECK(p.order == 8);
    CHECK(is_abelian(p));
    CHECK(order_profile(p)[4] == 4);

    FiniteGroup q = make_direct_product(make_cyclic(2), make_dihedral(4));
    CHECK(q.order == 16);

    FiniteGroup g = make_dihedral(3);
    FiniteGroup gt = make_direct_product(g, make_cyclic(1));
    CHECK(gt.order == g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) CHECK(gt.mul(a, b) == g.mul(a, b));

    int k = 2;
    while (k * k <= Bits::max_bits) ++k;
    CHECK_THROWS_AS(make_direct_product(make_cyclic(k), make_cyclic(k)), Error);
}

TEST_CASE("permutation closure") {
    FiniteGroup s3 = close_permutation_generators(3, {{1, 2, 0}, {1, 0, 2}});
    CHECK(s3.order == 6);
    CHECK(s3.labels[0] == "e");
    CHECK(!is_abelian(s3));

    FiniteGroup a4 = close_permutation_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}, {1, 2, 0, 3}});
    CHECK(a4.order == 12);
    CHECK(order_profile(a4) == order_profile(make_alt4()));

    // deterministic numbering: same generators, same table
    FiniteGroup again = close_permutation_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}, {1, 2, 0, 3}});
    CHECK(again.table == a4.table);

    CHECK_THROWS_AS(close_permutation_generators(3, {{0, 0, 1}}), Error);
    // a 13-cycle next to a 23-cycle generates a group of order 299, past
    // any supported row width
    std::vector<int> big(36);
    for (int i = 0; i < 13; ++i) big[i] = (i + 1) % 13;
    for (int i = 13; i < 36; ++i) big[i] = i + 1 < 36 ? i + 1 : 13;
    CHECK_THROWS_AS(close_permutation_generators(36, {big}), Error);
}

TEST_CASE("regular representation closure reproduces the order-27 matrix group") {
    FiniteGroup ut = make_ut3_3();
    // left-multiplication permutations of the generators on the 27 elements
    auto perm_of = [&](const char* label) {
        int x = ut.element_by_label(label);
        std::vector<int> p(ut.order);
        for (int v = 0; v < ut.order; ++v) p[v] = ut.mul(x, v);
        return p;
    };
    FiniteGroup closed = close_permutation_generators(27, {perm_of("a"), perm_of("b"), perm_of("c")});
    CHECK(closed.order == 27);
    CHECK(!is_abelian(closed));
    for (int a = 1; a < closed.order; ++a) CHECK(element_order(closed, a) == 3);
}

TEST_CASE("semidirect products") {
    // trivial action gives the direct product with the trivial group
    FiniteGroup n = make_cyclic(5);
    std::vector<std::vector<int>> trivial{{0, 1, 2, 3, 4}};
    FiniteGroup same = make_semidirect(n, make_cyclic(1), trivial);
    CHECK(same.order == 5);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) CHECK(same.mul(a, b) == n.mul(a, b));

    FiniteGroup g21 = make_c7_rtimes_c3();
    CHECK(g21.order == 21);
    int a = g21.element_by_label("a"), b = g21.element_by_label("b");
    CHECK(g21.mul(g21.mul(b, a), g21.inv(b)) == g21.mul(a, a));  // b a b^-1 = a^2

    FiniteGroup g18 = make_c3c3_rtimes_c2();
    CHECK(g18.order == 18);
    int t = g18.element_by_label("t");
    int aa = g18.element_by_label("a");
    CHECK(g18.mul(g18.mul(t, aa), t) == g18.mul(aa, aa));  // t a t = a^2

    // a non-automorphism entry is rejected
    std::vector<std::vector<int>> bad{{0, 1, 2, 3, 4}, {0, 2, 1, 3, 4}};
    CHECK_THROWS_AS(make_semidirect(n, make_cyclic(2), bad), Error);
    // an automorphism family that is not a homomorphism from H is rejected
    std::vector<std::vector<int>> nonhom{{0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}, {0, 1, 2, 3, 4}};
    CHECK_THROWS_AS(make_semidirect(n, make_cyclic(3), nonhom), Error);
}

TEST_CASE("alternating group presentation relations") {
    FiniteGroup a4 = make_alt4();
    int a = a4.element_by_label("a"), b = a4.element_by_label("b"), t = a4.element_by_label("t");
    CHECK(element_order(a4, a) == 2);
    CHECK(element_order(a4, b) == 2);
    CHECK(element_order(a4, t) == 3);
    CHECK(a4.mul(a, b) == a4.mul(b, a));
    int tinv = a4.inv(t);
    CHECK(a4.mul(a4.mul(tinv, a), t) == b);             // t^-1 a t = b
    CHECK(a4.mul(a4.mul(tinv, b), t) == a4.mul(a, b));  // t^-1 b t = ab
}

TEST_CASE("order-16 presentation relations") {
    FiniteGroup id11 = make_order16_id11();
    {
        int a = id11.element_by_label("a"), b = id11.element_by_label("b"), c = id11.element_by_label("c");
        CHECK(element_order(id11, a) == 4);
        CHECK(element_order(id11, b) == 2);
        CHECK(element_order(id11, c) == 2);
        CHECK(id11.mul(a, c) == id11.mul(c, a));
        CHECK(id11.mul(b, c) == id11.mul(c, b));
        CHECK(id11.power(id11.mul(a, b), 2) == 0);  // (ab)^2 = e
    }
    FiniteGroup id12 = make_order16_id12();
    {
        int a = id12.element_by_label("a"), b = id12.element_by_label("b"), c = id12.element_by_label("c");
        CHECK(id12.power(a, 2) == id12.power(b, 2));  // a^2 = b^2
        CHECK(element_order(id12, c) == 2);
        CHECK(id12.power(id12.mul(a, b), 2) == id12.power(a, 2));  // (ab)^2 = a^2
        CHECK(id12.mul(a, c) == id12.mul(c, a));
        CHECK(id12.mul(b, c) == id12.mul(c, b));
    }
    FiniteGroup id13 = make_order16_id13();
    {
        int a = id13.element_by_label("a"), b = id13.element_by_label("b"), c = id13.element_by_label("c");
        CHECK(id13.mul(a, b) == id13.mul(b, a));
        CHECK(id13.mul(a, c) == id13.mul(c, a));
        CHECK(id13.power(id13.mul(b, c), 2) == id13.power(a, 2));  // (bc)^2 = a^2
    }
    // the three tables are pairwise non-isomorphic at the fingerprint level
    CHECK(order_profile(id11) != order_profile(id12));
    CHECK(order_profile(id11) != order_profile(id13));
    CHECK(order_profile(id12) != order_profile(id13));
}

TEST_CASE("quaternion group") {
    FiniteGroup q8 = make_quaternion8();
    CHECK(q8.order == 8);
    CHECK(order_profile(q8) == std::vector<int>{0, 1, 1, 0, 6, 0, 0, 0, 0});
    int a = q8.element_by_label("a"), b = q8.element_by_label("b");
    CHECK(q8.power(a, 2) == q8.power(b, 2));
    CHECK(q8.power(q8.mul(a, b), 2) == q8.power(a, 2));
}

TEST_CASE("table validation") {
    FiniteGroup t1 = validate_table({{0}});
    CHECK(t1.order == 1);

    CHECK_NOTHROW(validate_table(raw_table(make_dihedral(3))));

    auto code_of = [](const std::vector<std::vector<int>>& raw) {
        try {
            validate_table(raw);
        } catch (const Error& e) {
            return e.code;
        }
        return errc::bad_format;
    };
    CHECK(code_of({{0, 1}, {1}}) == errc::not_square);
    CHECK(code_of({{0, 1}, {1, 5}}) == errc::bad_entry);
    CHECK(code_of({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}) == errc::missing_identity);
    // an idempotent non-identity forces a repeated column entry
    CHECK(code_of({{0, 1}, {1, 1}}) == errc::not_latin_square);
    // order-5 loop: Latin with identity but not associative
    CHECK(code_of({{0, 1, 2, 3, 4},
                   {1, 0, 3, 4, 2},
                   {2, 3, 4, 0, 1},
                   {3, 4, 1, 2, 0},
                   {4, 2, 0, 1, 3}}) == errc::not_associative);
}

TEST_CASE("every built-in constructor output validates") {
    std::vector<FiniteGroup> groups;
    for (const char* spec : {"cyclic:6", "dihedral:5", "elementary:3:2", "quaternion8", "alt4",
                             "c7_rtimes_c3", "ut3_3", "c3c3_rtimes_c2", "order16_id11", "order16_id12",
                             "order16_id13", "cyclic:2*cyclic:4"})
        groups.push_back(make_named_group(spec).group);
    for (const FiniteGroup& g : groups) {
        CHECK_NOTHROW(validate_table(raw_table(g), g.labels, g.name));
        for (int a = 0; a < g.order; ++a) CHECK(g.order % element_order(g, a) == 0);  // Lagrange
    }
}

TEST_CASE("single-entry corruption of a valid table is always rejected") {
    // changing one entry duplicates a value in its row, so validation must
    // throw every time and never crash
    std::mt19937 rng(404);
    for (const char* spec : {"cyclic:5", "dihedral:3", "quaternion8", "elementary:3:2"}) {
        FiniteGroup g = make_named_group(spec).group;
        auto base = raw_table(g);
        for (int trial = 0; trial < 200; ++trial) {
            auto raw = base;
            std::uniform_int_distribution<int> pick(0, g.order - 1);
            int r = pick(rng), c = pick(rng);
            int v = pick(rng);
            if (v == raw[r][c]) v = (v + 1) % g.order;
            raw[r][c] = v;
            CHECK_THROWS_AS(validate_table(raw), Error);
        }
    }
}

TEST_CASE("element order examples") {
    FiniteGroup z6 = make_cyclic(6);
    CHECK(element_order(z6, 0) == 1);
    CHECK(element_order(z6, 1) == 6);
    FiniteGroup d4 = make_dihedral(4);
    CHECK(element_order(d4, 4) == 2);  // the generator a
}

TEST_CASE("subgroup generation") {
    FiniteGroup z6 = make_cyclic(6);
    CHECK(subgroup_generated(z6, ElementSet(6)).elements() == std::vector<int>{0});
    CHECK(subgroup_generated(z6, set_of(z6, {1})).size() == 6);

    FiniteGroup d7 = make_dihedral(7);
    ElementSet a = set_of(d7, {0, 7, 13});
    ElementSet h = subgroup_generated(d7, boundary_set(d7, a));
    CHECK(h.size() == 14);
    CHECK(graph_components(d7, boundary_set(d7, a)).size() == 1);
}

TEST_CASE("coset partitions") {
    FiniteGroup d4 = make_dihedral(4);
    CHECK(coset_partition(d4, ElementSet::full(8)).size() == 1);
    CHECK(coset_partition(d4, set_of(d4, {0})).size() == 8);

    ElementSet rotations = subgroup_generated(d4, set_of(d4, {1}));
    CHECK(rotations.size() == 4);
    auto cells = coset_partition(d4, rotations);
    CHECK(cells.size() == 2);
    Bits seen;
    for (const auto& cell : cells) {
        CHECK(cell.size() == 4);
        CHECK(!cell.bits.intersects(seen));
        seen |= cell.bits;
    }
    CHECK(seen == Bits::first_n(8));

    CHECK_THROWS_AS(coset_partition(d4, set_of(d4, {0, 1})), Error);  // not a subgroup
}

TEST_CASE("opposite group and subgroup extraction") {
    FiniteGroup d5 = make_dihedral(5);
    FiniteGroup op = opposite_group(d5);
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b) CHECK(op.mul(a, b) == d5.mul(b, a));
    CHECK_NOTHROW(validate_table(raw_table(op)));

    ElementSet rot = subgroup_generated(d5, set_of(d5, {1}));
    auto [sub, back] = subgroup_as_group(d5, rot);
    CHECK(sub.order == 5);
    CHECK(back[0] == 0);
    CHECK_NOTHROW(validate_table(raw_table(sub)));
}

TEST_CASE("group table round trip") {
    FiniteGroup g = make_quaternion8();
    std::ostringstream out;
    save_group_table(g, out);
    std::istringstream in(out.str());
    FiniteGroup loaded = load_group_table(in, "q8");
    CHECK(loaded.order == g.order);
    CHECK(loaded.table == g.table);
    CHECK(loaded.labels == g.labels);

    std::istringstream bad_header("group-table v2\norder 1\n0\n");
    CHECK_THROWS_AS(load_group_table(bad_header), Error);
    // identity must be element 0
    std::istringstream shifted("group-table v1\norder 3\n1 2 0\n2 0 1\n0 1 2\n");
    CHECK_THROWS_AS(load_group_table(shifted), Error);
}
