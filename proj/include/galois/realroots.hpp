#pragma once

#include <vector>

#include "galois/poly.hpp"

namespace galois {

/// p0 = f, p1 = f', p(i+1) = -rem(p(i-1), p(i)) up to a positive integer
/// factor. Each element is kept primitive to control coefficient growth.
struct SturmSequence {
  std::vector<IntPoly> polys;
};

struct RootCount {
  int real = 0;
  int nonreal_r = 0;  // always even
  int s = 0;          // nonreal_r / 2
};

/// Throws Error{NotSquarefree} if gcd(f, f') is nonconstant.
SturmSequence sturm_sequence(const IntPoly& f);

RootCount count_real_roots(const IntPoly& f);
RootCount count_real_roots(const RationalPoly& f);

int sign_variations_at(const SturmSequence& chain, const Rational& v);
int sign_variations_at_neg_infinity(const SturmSequence& chain);
int sign_variations_at_pos_infinity(const SturmSequence& chain);

/// Number of distinct real roots in the half-open interval (lo, hi].
int count_roots_in(const SturmSequence& chain, const Rational& lo, const Rational& hi);

/// Every integer root of a squarefree f, ascending. Isolates by Sturm
/// bisection over integer intervals inside the Cauchy bound.
std::vector<Integer> integer_roots(const IntPoly& f);

}  // namespace galois
