#pragma once

#include <span>
#include <string>
#include <vector>

#include "galois/cycle_type.hpp"
#include "galois/groups.hpp"

namespace galois {

/// Permutation of {0, ..., n-1} in image form: perm[i] is the image of i.
using Permutation = std::vector<int>;

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
CycleType cycle_type(const Permutation& perm);

/// All elements of the group generated by `gens`, by breadth-first closure.
/// Intended for small groups only.
std::vector<Permutation> generate_group(std::span<const Permutation> gens);

struct DerivedGroup {
  std::string name;
  std::size_t order = 0;
  GroupSignature signature;
};

/// C5, D5, F20, A5 and S5 on five points, each enumerated from standard
/// generators, with their non-identity cycle types.
std::vector<DerivedGroup> derive_degree5_groups();

}  // namespace galois
