#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "galois/cycle_type.hpp"
#include "galois/poly.hpp"
#include "galois/resultant.hpp"

namespace galois {

/// Largest modulus accepted by FFPoly; keeps a + b below 2^64.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Smallest prime >= n.
std::uint64_t next_prime_at_least(std::uint64_t n);

/// Polynomial over the prime field F_q, coefficients in [0, q), trimmed.
class FFPoly {
 public:
  FFPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);

  static FFPoly zero(std::uint64_t modulus) { return FFPoly(modulus, {}); }
  static FFPoly x(std::uint64_t modulus) { return FFPoly(modulus, {0, 1}); }

  std::uint64_t modulus() const noexcept { return modulus_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }
  std::uint64_t leading() const { return coeffs_.back(); }
  std::uint64_t operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  friend bool operator==(const FFPoly&, const FFPoly&) = default;
  friend FFPoly operator+(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator-(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator*(const FFPoly& a, const FFPoly& b);

 private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> coeffs_;
};

/// (quotient, remainder); throws PreconditionViolated on division by zero.
std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b);
FFPoly monic(const FFPoly& a);
/// Monic gcd (zero only when both inputs are zero).
FFPoly gcd(const FFPoly& a, const FFPoly& b);
FFPoly derivative(const FFPoly& a);
/// base^exp mod m.
FFPoly powmod(const FFPoly& base, std::uint64_t exp, const FFPoly& m);

/// Coefficientwise reduction; throws LeadingCoeffVanishes when q | lc(f).
FFPoly reduce_mod(const IntPoly& f, std::uint64_t q);

bool is_squarefree_mod(const FFPoly& g);

/// Degrees of the irreducible factors of g via distinct-degree
/// factorization (the factors themselves are never split out). Throws
/// NotSquarefreeMod when g has a repeated factor.
CycleType frobenius_cycle_type(const FFPoly& g);

/// Primes q >= start, ascending, with q not dividing lc(f) and f mod q
/// squarefree, i.e. q does not divide the discriminant.
class GoodPrimeStream {
 public:
  GoodPrimeStream(IntPoly f, const Discriminant& disc, std::uint64_t start);

  std::uint64_t next();

 private:
  IntPoly f_;
  std::uint64_t cursor_;
};

}  // namespace galois
