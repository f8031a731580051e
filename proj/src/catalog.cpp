#include "sfactor/catalog.hpp"

namespace sfactor {

namespace {

// quaternion product on normal forms a^i b^j: b^2 = a^2, b a^i = a^-i b
std::pair<int, int> q8_mul(int i1, int j1, int i2, int j2) {
    int i = j1 ? (i1 - i2 + 4) % 4 : (i1 + i2) % 4;
    if (j1 && j2) i = (i + 2) % 4;
    return {i, j1 ^ j2};
}

FiniteGroup from_rule(int n, const std::string& name, int (*rule)(int, int)) {
    std::vector<std::vector<int>> raw(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) raw[a][b] = rule(a, b);
    FiniteGroup g = validate_table(raw, {}, name);
    return g;
}

}  // namespace

FiniteGroup make_quaternion8() {
    // index = i*2 + j for a^i b^j
    FiniteGroup g = from_rule(8, "quaternion8", [](int x, int y) {
        auto [i, j] = q8_mul(x >> 1, x & 1, y >> 1, y & 1);
        return i * 2 + j;
    });
    relabel_normal_forms(g, {{"a", 2, 4}, {"b", 1, 2}});
    return g;
}

FiniteGroup make_alt4() {
    // <a,b,t | a^2=b^2=t^3=e, ab=ba, t^-1 a t=b, t^-1 b t=ab> as
    // (C2 x C2) x| C3; t conjugates a->ab, b->a, ab->b.
    FiniteGroup klein = make_elementary_abelian(2, 2);
    FiniteGroup c3 = make_cyclic(3);
    std::vector<std::vector<int>> action{
        {0, 1, 2, 3},
        {0, 2, 3, 1},  // t: "01"->"10", "10"->"11", "11"->"01"
        {0, 3, 1, 2},
    };
    FiniteGroup g = make_semidirect(klein, c3, action);
    g.name = "alt4";
    int t = 1, a = 2 * 3, b = 1 * 3;  // (n,h) index = n*3 + h
    relabel_normal_forms(g, {{"t", t, 3}, {"a", a, 2}, {"b", b, 2}});
    return g;
}

FiniteGroup make_c7_rtimes_c3() {
    // <a,b | a^7=b^3=e, b a b^-1 = a^2>
    FiniteGroup c7 = make_cyclic(7);
    FiniteGroup c3 = make_cyclic(3);
    std::vector<std::vector<int>> action(3, std::vector<int>(7));
    for (int x = 0; x < 7; ++x) {
        action[0][x] = x;
        action[1][x] = 2 * x % 7;
        action[2][x] = 4 * x % 7;
    }
    FiniteGroup g = make_semidirect(c7, c3, action);
    g.name = "c7_rtimes_c3";
    int a = 1 * 3, b = 1;
    relabel_normal_forms(g, {{"a", a, 7}, {"b", b, 3}});
    return g;
}

FiniteGroup make_ut3_3() {
    // Unitriangular 3x3 matrices over the 3-element field, multiplied
    // directly: (x,y,z) stands for the matrix with entries (1,2)=x,
    // (2,3)=y, (1,3)=z, and (x1,y1,z1)(x2,y2,z2) =
    // (x1+x2, y1+y2, z1+z2+x1*y2).  Index = 9x + 3y + z.
    FiniteGroup g = from_rule(27, "ut3_3", [](int p, int q) {
        int x1 = p / 9, y1 = p / 3 % 3, z1 = p % 3;
        int x2 = q / 9, y2 = q / 3 % 3, z2 = q % 3;
        return ((x1 + x2) % 3) * 9 + ((y1 + y2) % 3) * 3 + (z1 + z2 + x1 * y2) % 3;
    });
    // a = transvection at (1,2), b at (2,3), c at (1,3) with entry -1
    int a = 9, b = 3, c = 2;
    relabel_normal_forms(g, {{"a", a, 3}, {"b", b, 3}, {"c", c, 3}});
    return g;
}

FiniteGroup make_c3c3_rtimes_c2() {
    // <a,b,t | a^3=b^3=t^2=e, ab=ba, tat=a^2, tbt=b^2>
    FiniteGroup n = make_elementary_abelian(3, 2);
    FiniteGroup c2 = make_cyclic(2);
    std::vector<std::vector<int>> action(2, std::vector<int>(9));
    for (int x = 0; x < 9; ++x) {
        action[0][x] = x;
        action[1][x] = n.inv(x);
    }
    FiniteGroup g = make_semidirect(n, c2, action);
    g.name = "c3c3_rtimes_c2";
    int a = 3 * 2, b = 1 * 2, t = 1;  // (n,h) index = n*2 + h
    relabel_normal_forms(g, {{"a", a, 3}, {"b", b, 3}, {"t", t, 2}});
    return g;
}

namespace {

// all three order-16 tables use index = i*4 + j*2 + k for a^i b^j c^k

FiniteGroup order16_common(const std::string& name, int (*rule)(int, int)) {
    FiniteGroup g = from_rule(16, name, rule);
    relabel_normal_forms(g, {{"a", 4, 4}, {"b", 2, 2}, {"c", 1, 2}});
    return g;
}

}  // namespace

FiniteGroup make_order16_id11() {
    return order16_common("order16_id11", [](int p, int q) {
        int i1 = p >> 2, j1 = (p >> 1) & 1, k1 = p & 1;
        int i2 = q >> 2, j2 = (q >> 1) & 1, k2 = q & 1;
        int i = j1 ? (i1 - i2 + 4) % 4 : (i1 + i2) % 4;  // b a^i = a^-i b
        return i * 4 + (j1 ^ j2) * 2 + (k1 ^ k2);
    });
}

FiniteGroup make_order16_id12() {
    return order16_common("order16_id12", [](int p, int q) {
        int k1 = p & 1, k2 = q & 1;
        auto [i, j] = q8_mul(p >> 2, (p >> 1) & 1, q >> 2, (q >> 1) & 1);
        return i * 4 + j * 2 + (k1 ^ k2);
    });
}

FiniteGroup make_order16_id13() {
    return order16_common("order16_id13", [](int p, int q) {
        int i1 = p >> 2, j1 = (p >> 1) & 1, k1 = p & 1;
        int i2 = q >> 2, j2 = (q >> 1) & 1, k2 = q & 1;
        int i = (i1 + i2 + 2 * j2 * k1) % 4;  // c b = a^2 b c, a central
        return i * 4 + (j1 ^ j2) * 2 + (k1 ^ k2);
    });
}

namespace {

ElementSet labeled_subset(const FiniteGroup& g, const std::vector<std::string>& labs) {
    ElementSet s(g.order);
    for (const auto& l : labs) s.add(g.element_by_label(l));
    return s;
}

NamedGroup make_single(const std::string& spec) {
    auto starts_with = [&](const char* p) { return spec.rfind(p, 0) == 0; };
    auto tail_int = [&](size_t off) {
        size_t pos = 0;
        int v = std::stoi(spec.substr(off), &pos);
        if (off + pos != spec.size()) throw Error(errc::unknown_group, "trailing junk in group spec '" + spec + "'");
        return v;
    };

    if (starts_with("cyclic:")) {
        int n = tail_int(7);
        NamedGroup out{make_cyclic(n), std::nullopt, "cyclic group of order " + std::to_string(n)};
        ElementSet a(n);
        a.add(0);
        if (n >= 2) a.add(1);
        out.designated_subset = a;
        return out;
    }
    if (starts_with("dihedral:")) {
        int n = tail_int(9);
        NamedGroup out{make_dihedral(n), std::nullopt, "dihedral group of order " + std::to_string(2 * n)};
        out.designated_subset = ElementSet(2 * n, {0, n, 2 * n - 1});  // {e, a, b}
        return out;
    }
    if (starts_with("elementary:")) {
        size_t colon = spec.find(':', 11);
        if (colon == std::string::npos) throw Error(errc::unknown_group, "expected elementary:p:k");
        int p = std::stoi(spec.substr(11, colon - 11));
        int k = std::stoi(spec.substr(colon + 1));
        FiniteGroup g = make_elementary_abelian(p, k);
        ElementSet a(g.order);
        a.add(0);
        int basis = 1;
        for (int i = 0; i < k; ++i, basis *= p) a.add(basis);  // 0 plus the standard basis
        return {std::move(g), a, "elementary abelian group of rank " + std::to_string(k)};
    }
    if (spec == "quaternion8") {
        FiniteGroup g = make_quaternion8();
        ElementSet a = labeled_subset(g, {"e", "a", "b"});
        return {std::move(g), a, "quaternion group of order 8"};
    }
    if (spec == "alt4") {
        FiniteGroup g = make_alt4();
        ElementSet a = labeled_subset(g, {"e", "b", "t"});
        return {std::move(g), a, "alternating group on 4 points"};
    }
    if (spec == "c7_rtimes_c3") {
        FiniteGroup g = make_c7_rtimes_c3();
        ElementSet a = labeled_subset(g, {"e", "a", "b"});
        return {std::move(g), a, "nonabelian group of order 21"};
    }
    if (spec == "ut3_3") {
        FiniteGroup g = make_ut3_3();
        ElementSet a = labeled_subset(g, {"e", "a", "b", "c"});
        return {std::move(g), a, "unitriangular 3x3 matrices over the 3-element field"};
    }
    if (spec == "c3c3_rtimes_c2") {
        FiniteGroup g = make_c3c3_rtimes_c2();
        ElementSet a(g.order);
        a.add(0);
        a.add(g.element_by_label("a"));
        a.add(g.element_by_label("t"));
        a.add(g.mul(g.element_by_label("b"), g.element_by_label("t")));
        return {std::move(g), a, "order-18 semidirect product with inversion action"};
    }
    if (spec == "order16_id11" || spec == "order16_id12" || spec == "order16_id13") {
        FiniteGroup g = spec == "order16_id11"   ? make_order16_id11()
                        : spec == "order16_id12" ? make_order16_id12()
                                                 : make_order16_id13();
        ElementSet a = labeled_subset(g, {"e", "a", "b", "c"});
        return {std::move(g), a, "group of order 16"};
    }
    throw Error(errc::unknown_group, "unknown group spec '" + spec + "'");
}

}  // namespace

NamedGroup make_named_group(const std::string& spec) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t star = spec.find('*', start);
        if (star == std::string::npos) {
            parts.push_back(spec.substr(start));
            break;
        }
        parts.push_back(spec.substr(start, star - start));
        start = star + 1;
    }
    if (parts.empty() || parts[0].empty()) throw Error(errc::unknown_group, "empty group spec");
    NamedGroup acc = make_single(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) {
        NamedGroup next = make_single(parts[i]);
        acc.group = make_direct_product(acc.group, next.group);
        acc.designated_subset.reset();  // products carry no designated subset
        acc.description = "direct product";
    }
    return acc;
}

std::vector<std::string> builtin_names() {
    return {"cyclic:<n>",   "dihedral:<n>",   "elementary:<p>:<k>", "quaternion8",
            "alt4",         "c7_rtimes_c3",   "ut3_3",              "c3c3_rtimes_c2",
            "order16_id11", "order16_id12",   "order16_id13"};
}

}  // namespace sfactor
