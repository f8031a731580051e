#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfactor/group.hpp"

namespace sfactor {

// A built-in group plus the subset its computations are usually run with
// (the one the CLI binds to `--subset paper`).
struct NamedGroup {
    FiniteGroup group;
    std::optional<ElementSet> designated_subset;
    std::string description;
};

FiniteGroup make_quaternion8();
FiniteGroup make_alt4();
FiniteGroup make_c7_rtimes_c3();
FiniteGroup make_ut3_3();
FiniteGroup make_c3c3_rtimes_c2();

// The three order-16 groups that need direct computation.  Presentations:
//   id11  <a,b,c | a^4=b^2=c^2=e, ac=ca, bc=cb, (ab)^2=e>        (C2 x D4)
//   id12  <a,b,c | a^4=b^4=c^2=e, a^2=b^2, ac=ca, bc=cb, (ab)^2=a^2>  (C2 x Q8)
//   id13  <a,b,c | a^4=b^2=c^2=e, ab=ba, ac=ca, (bc)^2=a^2>
// The suffix is the conventional small-group id of order 16 each table
// realizes; only the presentation above is pinned here, no isomorphism
// check against external catalogs is performed.
FiniteGroup make_order16_id11();
FiniteGroup make_order16_id12();
FiniteGroup make_order16_id13();

// Parse a group spec: a named family ("cyclic:9", "dihedral:4",
// "elementary:3:3", "quaternion8", "alt4", "c7_rtimes_c3", "ut3_3",
// "c3c3_rtimes_c2", "order16_id11/12/13") or a '*'-joined direct product
// of such specs.
NamedGroup make_named_group(const std::string& spec);

std::vector<std::string> builtin_names();

}  // namespace sfactor
