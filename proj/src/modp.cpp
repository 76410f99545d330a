#include "galois/modp.hpp"

#include <array>
#include <string>

namespace galois {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>(static_cast<u128>(a) * b % q); }
u64 addmod(u64 a, u64 b, u64 q) {
  const u64 s = a + b;
  return s >= q ? s - q : s;
}
u64 submod(u64 a, u64 b, u64 q) { return a >= b ? a - b : a + (q - b); }

u64 powmod_scalar(u64 base, u64 exp, u64 q) {
  u64 result = 1 % q;
  base %= q;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, q);
    base = mulmod(base, base, q);
    exp >>= 1;
  }
  return result;
}

u64 inverse(u64 a, u64 q) { return powmod_scalar(a, q - 2, q); }

void check_same_field(const FFPoly& a, const FFPoly& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorCode::PreconditionViolated, "mixed moduli");
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : bases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : bases) {
    u64 x = powmod_scalar(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 next_prime_at_least(u64 n) {
  if (n <= 2) return 2;
  u64 q = n | 1;
  while (!is_prime(q)) q += 2;
  return q;
}

FFPoly::FFPoly(u64 modulus, std::vector<u64> coeffs) : modulus_(modulus), coeffs_(std::move(coeffs)) {
  if (modulus_ < 2 || modulus_ >= kMaxModulus) {
    throw Error(ErrorCode::PreconditionViolated, "modulus out of range: " + std::to_string(modulus_));
  }
  for (auto& c : coeffs_) c %= modulus_;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FFPoly operator+(const FFPoly& a, const FFPoly& b) {
  check_same_field(a, b);
  const u64 q = a.modulus();
  std::vector<u64> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = addmod(a[i], b[i], q);
  return FFPoly(q, std::move(out));
}

FFPoly operator-(const FFPoly& a, const FFPoly& b) {
  check_same_field(a, b);
  const u64 q = a.modulus();
  std::vector<u64> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = submod(a[i], b[i], q);
  return FFPoly(q, std::move(out));
}

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
  check_same_field(a, b);
  const u64 q = a.modulus();
  if (a.is_zero() || b.is_zero()) return FFPoly::zero(q);
  std::vector<u64> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = addmod(out[i + j], mulmod(a.coeffs()[i], b.coeffs()[j], q), q);
    }
  }
  return FFPoly(q, std::move(out));
}

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw Error(ErrorCode::PreconditionViolated, "division by zero polynomial mod q");
  const u64 q = a.modulus();
  if (a.degree() < b.degree()) return {FFPoly::zero(q), a};
  std::vector<u64> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<u64> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const u64 inv_lead = inverse(b.leading(), q);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const u64 c = mulmod(r[static_cast<std::size_t>(i)], inv_lead, q);
    quot[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = submod(slot, mulmod(c, b.coeffs()[static_cast<std::size_t>(j)], q), q);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {FFPoly(q, std::move(quot)), FFPoly(q, std::move(r))};
}

FFPoly monic(const FFPoly& a) {
  if (a.is_zero()) return a;
  const u64 q = a.modulus();
  const u64 inv = inverse(a.leading(), q);
  std::vector<u64> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c = mulmod(c, inv, q);
  return FFPoly(q, std::move(out));
}

FFPoly gcd(const FFPoly& a, const FFPoly& b) {
  FFPoly x = a;
  FFPoly y = b;
  while (!y.is_zero()) {
    FFPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

FFPoly derivative(const FFPoly& a) {
  const u64 q = a.modulus();
  if (a.degree() < 1) return FFPoly::zero(q);
  std::vector<u64> out(static_cast<std::size_t>(a.degree()));
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) out[i - 1] = mulmod(static_cast<u64>(i) % q, a.coeffs()[i], q);
  return FFPoly(q, std::move(out));
}

FFPoly powmod(const FFPoly& base, u64 exp, const FFPoly& m) {
  FFPoly result = divmod(FFPoly(m.modulus(), {1}), m).second;
  FFPoly b = divmod(base, m).second;
  while (exp > 0) {
    if (exp & 1) result = divmod(result * b, m).second;
    exp >>= 1;
    if (exp > 0) b = divmod(b * b, m).second;
  }
  return result;
}

FFPoly reduce_mod(const IntPoly& f, u64 q) {
  if (!is_prime(q)) throw Error(ErrorCode::PreconditionViolated, std::to_string(q) + " is not prime");
  std::vector<u64> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), q));
  if (!f.is_zero() && out.back() == 0) {
    throw Error(ErrorCode::LeadingCoeffVanishes, std::to_string(q) + " divides the leading coefficient");
  }
  return FFPoly(q, std::move(out));
}

bool is_squarefree_mod(const FFPoly& g) {
  if (g.degree() < 1) throw Error(ErrorCode::PreconditionViolated, "squarefree test needs degree >= 1");
  return gcd(g, derivative(g)).degree() == 0;
}

CycleType frobenius_cycle_type(const FFPoly& g) {
  if (g.degree() < 1) throw Error(ErrorCode::PreconditionViolated, "cycle type needs degree >= 1");
  if (!is_squarefree_mod(g)) {
    throw Error(ErrorCode::NotSquarefreeMod, "repeated factor modulo " + std::to_string(g.modulus()));
  }
  const u64 q = g.modulus();
  const FFPoly x = FFPoly::x(q);
  std::vector<int> parts;
  FFPoly rest = monic(g);
  FFPoly h = divmod(x, rest).second;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, q, rest);  // x^(q^d) mod rest
    const FFPoly factor = gcd(rest, h - x);
    if (factor.degree() > 0) {
      parts.insert(parts.end(), static_cast<std::size_t>(factor.degree() / d), d);
      rest = divmod(rest, factor).first;
      h = divmod(h, rest).second;
    }
  }
  if (rest.degree() > 0) parts.push_back(rest.degree());
  return CycleType(std::move(parts));
}

GoodPrimeStream::GoodPrimeStream(IntPoly f, const Discriminant& disc, u64 start)
    : f_(std::move(f)), cursor_(start) {
  if (disc.value == 0) throw Error(ErrorCode::ZeroDiscriminant, "no good primes exist");
  if (f_.degree() < 1) throw Error(ErrorCode::PreconditionViolated, "good primes need degree >= 1");
}

u64 GoodPrimeStream::next() {
  while (true) {
    const u64 q = next_prime_at_least(cursor_);
    cursor_ = q + 1;
    if (mpz_fdiv_ui(f_.leading().get_mpz_t(), q) == 0) continue;
    if (is_squarefree_mod(reduce_mod(f_, q))) return q;
  }
}

}  // namespace galois
