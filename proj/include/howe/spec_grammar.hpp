#pragma once

// Flat command-line grammars:
//   integer lists   "2,1,1"          (empty string = empty partition)
//   orbit specs     "0^2,4^1,1^1"    exponent^multiplicity, multiplicity defaults to 1,
//                                    "z" denotes the (invalid) zero eigenvalue
//   GL part specs   "1:1,2:sigma"    size:label, label "1" is the trivial cuspidal, bare "1" = "1:1"

#include <string_view>
#include <vector>

#include "howe/lusztig_reduction.hpp"
#include "howe/partition.hpp"

namespace howe {

Partition parse_partition(std::string_view text);
SemisimpleDescriptor parse_orbits(std::string_view text, int q, int degree);
std::vector<GlCuspidal> parse_gl_part(std::string_view text);

}  // namespace howe
