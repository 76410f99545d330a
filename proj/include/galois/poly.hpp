#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "galois/error.hpp"

namespace galois {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial, coefficient i multiplies x^i.
///
/// The coefficient vector is always trimmed, so the leading coefficient is
/// nonzero and size() == degree() + 1. The zero polynomial has an empty
/// vector and degree -1; it only appears as an intermediate (remainders,
/// differences) and is rejected by the public operations that need a
/// genuine polynomial.
template <class Coeff>
class Polynomial {
 public:
  using coeff_type = Coeff;

  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }
  static Polynomial monomial(Coeff c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  const Coeff& leading() const { return coeffs_.back(); }

  /// Coefficient of x^i; zero beyond the degree.
  Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Coeff> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Coeff& c, const Polynomial& a) {
    std::vector<Coeff> out(a.coeffs_);
    for (auto& x : out) x *= c;
    return Polynomial(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPoly = Polynomial<Integer>;
using RationalPoly = Polynomial<Rational>;

/// Roots of the normalized polynomial are `scale` times the roots of the input.
struct ScalingRecord {
  Integer scale{1};

  std::string relation() const;
};

struct MonicNormalization {
  IntPoly poly;
  ScalingRecord scaling;
};

/// Monic integer polynomial with the same splitting field: divide by the
/// leading coefficient, then g(x) = d^n f(x/d) with d the smallest scale
/// making every coefficient integral (denominators are factored by trial
/// division; a large unfactored part enters d whole).
MonicNormalization normalize_monic_integer(const RationalPoly& f);

template <class Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& f) {
  if (f.degree() < 1) throw Error(ErrorCode::PreconditionViolated, "derivative needs degree >= 1");
  std::vector<Coeff> out(static_cast<std::size_t>(f.degree()));
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) out[i - 1] = Coeff(static_cast<unsigned long>(i)) * f.coeffs()[i];
  return Polynomial<Coeff>(std::move(out));
}

/// Exact Horner evaluation.
Rational eval_at_rational(const RationalPoly& f, const Rational& v);
Integer eval_at_integer(const IntPoly& f, const Integer& v);

/// Sign of f(v) without forming the rational value (denominators cleared).
int sign_at(const IntPoly& f, const Rational& v);

RationalPoly to_rational(const IntPoly& f);

/// Returns (F, D) with F = D * f integral and D > 0 minimal.
std::pair<IntPoly, Integer> clear_denominators(const RationalPoly& f);

/// Nonnegative gcd of the coefficients; zero for the zero polynomial.
Integer content(const IntPoly& f);

/// f / content(f) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Greatest common divisor over Z[x] (primitive remainder sequence); the
/// result has positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Canonical text in the parser grammar, highest degree first, e.g.
/// "x^3 - 1/2*x + 4".
std::string to_text(const RationalPoly& f);
std::string to_text(const IntPoly& f);

}  // namespace galois
