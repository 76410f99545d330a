#include "galois/resultant.hpp"

namespace galois {

namespace {

Integer power(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

IntPoly divide_exact(const IntPoly& f, const Integer& c) {
  std::vector<Integer> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

Discriminant make_discriminant(Rational value) {
  value.canonicalize();
  if (value == 0) throw Error(ErrorCode::ZeroDiscriminant, "repeated root");
  const SquareTest sq = is_rational_square(value);
  return Discriminant{value, sq.is_square, sq.root};
}

}  // namespace

Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::PreconditionViolated, "resultant of zero polynomial");

  IntPoly a = f;
  IntPoly b = g;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 != 0 && b.degree() % 2 != 0) sign = -1;
  }
  if (b.degree() == 0) return sign * power(b.leading(), static_cast<unsigned long>(a.degree()));

  const Integer ca = content(a);
  const Integer cb = content(b);
  // Res(ca A, cb B) = ca^deg B cb^deg A Res(A, B)
  const Integer t = power(ca, static_cast<unsigned long>(b.degree())) * power(cb, static_cast<unsigned long>(a.degree()));
  a = divide_exact(a, ca);
  b = divide_exact(b, cb);

  Integer gg = 1;
  Integer h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 != 0 && b.degree() % 2 != 0) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    // divisor g * h^delta is exact by the subresultant theorem
    b = divide_exact(r, gg * power(h, static_cast<unsigned long>(delta)));
    gg = a.leading();
    if (delta == 0) {
      // h^(1-0) g^0 = h
    } else {
      Integer num = power(gg, static_cast<unsigned long>(delta));
      Integer den = power(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.is_zero()) return 0;
    if (b.degree() == 0) break;
  }
  // h <- lc(B)^deg A / h^(deg A - 1)
  const unsigned long da = static_cast<unsigned long>(a.degree());
  Integer num = power(b.leading(), da);
  Integer den = power(h, da - 1);
  Integer last;
  mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return sign * t * last;
}

SquareTest is_rational_square(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v < 0) return {};
  if (mpz_perfect_square_p(v.get_num_mpz_t()) == 0 || mpz_perfect_square_p(v.get_den_mpz_t()) == 0) return {};
  Integer num;
  Integer den;
  mpz_sqrt(num.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), v.get_den_mpz_t());
  Rational root(num, den);
  root.canonicalize();
  return {true, root};
}

Discriminant discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "discriminant needs degree >= 2");
  Integer res = resultant(f, derivative(f));
  if (res == 0) throw Error(ErrorCode::ZeroDiscriminant, "Res(f, f') = 0 (repeated root)");
  Integer q;
  mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) q = -q;
  return make_discriminant(Rational(q));
}

Discriminant discriminant(const RationalPoly& f) {
  const int n = f.degree();
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "discriminant needs degree >= 2");
  // F = D f scales the discriminant by D^(2n-2).
  const auto [integral, d] = clear_denominators(f);
  const Discriminant scaled = discriminant(integral);
  Rational value = scaled.value / Rational(power(d, static_cast<unsigned long>(2 * n - 2)));
  return make_discriminant(std::move(value));
}

}  // namespace galois
