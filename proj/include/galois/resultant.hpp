#pragma once

#include <optional>

#include "galois/poly.hpp"

namespace galois {

/// Res(f, g) by the subresultant remainder sequence. Agrees with the
/// Sylvester determinant, including the (-1)^(deg f deg g) swap sign.
Integer resultant(const IntPoly& f, const IntPoly& g);

struct SquareTest {
  bool is_square = false;
  std::optional<Rational> root;  // nonnegative, present iff is_square
};

SquareTest is_rational_square(const Rational& v);

struct Discriminant {
  Rational value;
  bool is_square = false;
  std::optional<Rational> square_root;
};

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Throws ZeroDiscriminant on a
/// repeated root and PreconditionViolated for degree < 2.
Discriminant discriminant(const IntPoly& f);

/// Discriminant of a rational polynomial under the same convention:
/// lc^(2n-2) times the product of squared root differences.
Discriminant discriminant(const RationalPoly& f);

}  // namespace galois
