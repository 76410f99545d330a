#include "galois/permutation.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "galois/error.hpp"

namespace galois {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

CycleType cycle_type(const Permutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

std::vector<Permutation> generate_group(std::span<const Permutation> gens) {
  if (gens.empty()) throw Error(ErrorCode::PreconditionViolated, "no generators");
  const std::size_t n = gens.front().size();
  Permutation identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = static_cast<int>(i);

  std::set<Permutation> seen{identity};
  std::deque<Permutation> frontier{identity};
  while (!frontier.empty()) {
    const Permutation g = frontier.front();
    frontier.pop_front();
    for (const auto& s : gens) {
      Permutation h = compose(s, g);
      if (seen.insert(h).second) frontier.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<DerivedGroup> derive_degree5_groups() {
  auto affine = [](int a, int b) {
    Permutation p(5);
    for (int x = 0; x < 5; ++x) p[static_cast<std::size_t>(x)] = (a * x + b) % 5;
    return p;
  };
  const Permutation rotation = affine(1, 1);
  const Permutation reflection = affine(4, 0);
  const Permutation multiplier = affine(2, 0);
  const Permutation three_cycle{1, 2, 0, 3, 4};
  const Permutation transposition{1, 0, 2, 3, 4};

  struct Spec {
    const char* name;
    bool solvable;
    std::vector<Permutation> gens;
  };
  const std::vector<Spec> specs{
      {"C5", true, {rotation}},
      {"D5", true, {rotation, reflection}},
      {"F20", true, {rotation, multiplier}},
      {"A5", false, {rotation, three_cycle}},
      {"S5", false, {rotation, transposition}},
  };

  std::vector<DerivedGroup> out;
  for (const auto& spec : specs) {
    const auto elements = generate_group(spec.gens);
    std::set<CycleType> types;
    for (const auto& g : elements) {
      CycleType t = cycle_type(g);
      if (!t.is_identity()) types.insert(std::move(t));
    }
    GroupSignature sig;
    sig.prime_degree = 5;
    sig.name = spec.name;
    sig.solvable = spec.solvable;
    sig.types.assign(types.begin(), types.end());
    sig.provenance = Provenance::Computed;
    out.push_back({spec.name, elements.size(), std::move(sig)});
  }
  return out;
}

}  // namespace galois
