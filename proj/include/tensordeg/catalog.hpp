#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tensordeg/group.hpp"

namespace tdeg {

/**
 * Builds a group from a catalog expression.
 *
 * Factors, joined by 'x' for direct products:
 *   C<n>    cyclic, element i = a^i
 *   D<n>    dihedral of order 2n, element i + n*j = r^i s^j
 *   Dic<n>  dicyclic of order 4n, element i + 2n*j = a^i x^j with x^2 = a^n
 *   Q8, Q16 aliases of Dic2 and Dic4
 *   S<n>, A<n> (n <= 5) permutations in lexicographic one-line order,
 *           product (p q)(i) = p(q(i))
 * Direct products order elements lexicographically, first factor most significant.
 * Throws UnknownGroup.
 */
GroupPtr catalog_group(std::string_view expr);

/// Catalog swept by the census when no groups are given.
std::vector<std::string> default_catalog();

}  // namespace tdeg
