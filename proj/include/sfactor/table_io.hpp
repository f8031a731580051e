#pragma once

#include <iosfwd>
#include <string>

#include "sfactor/group.hpp"

namespace sfactor {

// Text format:
//   group-table v1
//   order <n>
//   <n lines of n whitespace-separated indices>
//   labels <comma-separated names>     (optional)
// Element 0 must be the identity; the table goes through full validation.
FiniteGroup load_group_table(std::istream& in, const std::string& name = "table");
FiniteGroup load_group_table_file(const std::string& path);
void save_group_table(const FiniteGroup& g, std::ostream& out);

}  // namespace sfactor
