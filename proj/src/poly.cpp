#include "galois/poly.hpp"

#include <algorithm>
#include <map>

namespace galois {

std::string ScalingRecord::relation() const {
  return "roots(output) = " + scale.get_str() + " * roots(input)";
}

namespace {

// Smallest d (up to a large unfactored cofactor) with den(a_i) | d^(n-i)
// for every i. Denominators are split by trial division below a bound;
// whatever remains is taken whole, which is still sufficient.
Integer integral_scale(const std::vector<Rational>& monic) {
  constexpr unsigned long kTrialBound = 1UL << 16;
  const int n = static_cast<int>(monic.size()) - 1;
  std::map<unsigned long, unsigned long> need;  // prime -> exponent in d
  Integer leftover = 1;
  for (int i = 0; i < n; ++i) {
    Integer den = monic[static_cast<std::size_t>(i)].get_den();
    if (den == 1) continue;
    const unsigned long k = static_cast<unsigned long>(n - i);
    for (unsigned long q = 2; q < kTrialBound && den > 1; ++q) {
      if (mpz_divisible_ui_p(den.get_mpz_t(), q) == 0) continue;
      unsigned long e = 0;
      while (mpz_divisible_ui_p(den.get_mpz_t(), q) != 0) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), q);
        ++e;
      }
      auto& slot = need[q];
      slot = std::max(slot, (e + k - 1) / k);
    }
    if (den > 1) mpz_lcm(leftover.get_mpz_t(), leftover.get_mpz_t(), den.get_mpz_t());
  }
  Integer d = leftover;
  for (const auto& [q, e] : need) {
    Integer qe;
    mpz_ui_pow_ui(qe.get_mpz_t(), q, e);
    d *= qe;
  }
  return d;
}

}  // namespace

MonicNormalization normalize_monic_integer(const RationalPoly& f) {
  if (f.degree() < 1) throw Error(ErrorCode::DegreeZero, "cannot normalize a constant polynomial");
  const int n = f.degree();
  const Rational lc = f.leading();

  std::vector<Rational> monic(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : monic) {
    c /= lc;
    c.canonicalize();
  }

  const Integer d = integral_scale(monic);

  // g(x) = d^n f(x/d): coefficient i becomes a_i * d^(n-i).
  std::vector<Integer> out(static_cast<std::size_t>(n) + 1);
  Integer power = 1;
  for (int i = n; i >= 0; --i) {
    Rational scaled = monic[static_cast<std::size_t>(i)] * Rational(power);
    scaled.canonicalize();
    if (scaled.get_den() != 1) throw Error(ErrorCode::PreconditionViolated, "scale does not clear denominators");
    out[static_cast<std::size_t>(i)] = scaled.get_num();
    power *= d;
  }
  return {IntPoly(std::move(out)), ScalingRecord{d}};
}

Rational eval_at_rational(const RationalPoly& f, const Rational& v) {
  Rational acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * v + *it;
  }
  acc.canonicalize();
  return acc;
}

Integer eval_at_integer(const IntPoly& f, const Integer& v) {
  Integer acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * v + *it;
  }
  return acc;
}

int sign_at(const IntPoly& f, const Rational& v) {
  // den^n f(num/den) = sum a_i num^i den^(n-i); den > 0 keeps the sign.
  if (f.is_zero()) return 0;
  const Integer& num = v.get_num();
  const Integer& den = v.get_den();
  Integer acc = 0;
  Integer den_power = 1;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * num + *it * den_power;
    den_power *= den;
  }
  return sgn(acc);
}

RationalPoly to_rational(const IntPoly& f) {
  std::vector<Rational> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.emplace_back(c);
  return RationalPoly(std::move(out));
}

std::pair<IntPoly, Integer> clear_denominators(const RationalPoly& f) {
  Integer d = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.emplace_back(c.get_num() * (d / c.get_den()));
  return {IntPoly(std::move(out)), d};
}

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (f.leading() < 0) c = -c;
  std::vector<Integer> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::PreconditionViolated, "pseudo-division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Integer& lb = b.leading();
  // deg a - deg b + 1 elimination steps, each scaling by lc(b).
  for (int i = a.degree(); i >= db; --i) {
    const Integer c = r[static_cast<std::size_t>(i)];
    for (int j = 0; j <= i; ++j) r[static_cast<std::size_t>(j)] *= lb;
    if (c != 0) {
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return (b.is_zero() || b.leading() > 0) ? b : -b;
  if (b.is_zero()) return gcd(b, a);
  Integer g;
  const Integer ca = content(a);
  const Integer cb = content(b);
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return g * x;
}

namespace {

template <class Coeff>
std::string render(const Polynomial<Coeff>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    Coeff c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Coeff magnitude = negative ? Coeff(-c) : c;
    if (i == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace

std::string to_text(const RationalPoly& f) { return render(f); }
std::string to_text(const IntPoly& f) { return render(f); }

}  // namespace galois
