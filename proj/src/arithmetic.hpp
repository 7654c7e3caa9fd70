#pragma once

// Payload-level group laws shared by the base groups and their extensions.

#include <string>
#include <string_view>

#include "conjlab/group.hpp"

namespace conjlab::detail {

// Matrix product [[1,a1,c1],[0,1,b1],[0,0,1]] * [[1,a2,c2],[0,1,b2],[0,0,1]].
HeisenbergTriple h3_multiply(const HeisenbergTriple& x, const HeisenbergTriple& y);
HeisenbergTriple h3_invert(const HeisenbergTriple& x);
// Automorphism A_p <-> A_x, A_1 -> A_1^-1.
HeisenbergTriple h3_swap(const HeisenbergTriple& x);
std::string h3_encode(const HeisenbergTriple& x);
HeisenbergTriple h3_parse(std::string_view text);

DihedralWord dihedral_multiply(const DihedralWord& x, const DihedralWord& y);
DihedralWord dihedral_invert(const DihedralWord& x);
// Automorphism a <-> b.
DihedralWord dihedral_swap(const DihedralWord& x);
std::string dihedral_encode(const DihedralWord& x);
DihedralWord dihedral_parse(std::string_view text);

Integer parse_integer(std::string_view text);

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_integer(const Integer& z);

}  // namespace conjlab::detail
