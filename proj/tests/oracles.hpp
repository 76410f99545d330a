#pragma once

// Independent reference computations shared by the unit suites and the
// acceptance runner. Nothing here calls the code it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "galois/poly.hpp"

namespace oracle {

using galois::Integer;
using galois::IntPoly;
using galois::Rational;

inline IntPoly ip(std::initializer_list<long> xs) {
  std::vector<Integer> c;
  for (long x : xs) c.emplace_back(x);
  return IntPoly(std::move(c));
}

// ---- real roots -----------------------------------------------------------

struct Constructed {
  IntPoly poly;
  int real = 0;
};

// Product of distinct linear factors (b x - a) and distinct irreducible
// quadratics a x^2 + b x + c with b^2 < 4ac, degree 1..max_degree.
inline Constructed random_product(std::mt19937_64& rng, int max_degree = 10) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<long> small(-12, 12);
  std::uniform_int_distribution<long> pos(1, 4);
  const int target = deg(rng);
  Constructed out{ip({1}), 0};
  std::set<Rational> roots;
  std::set<std::pair<Rational, Rational>> quads;
  while (out.poly.degree() < target) {
    const bool quadratic = target - out.poly.degree() >= 2 && (rng() % 2 == 0);
    if (quadratic) {
      const long a = pos(rng);
      const long b = small(rng);
      const long lo = b * b / (4 * a) + 1;
      const long c = std::uniform_int_distribution<long>(lo, lo + 14)(rng);
      if (b * b >= 4 * a * c) continue;
      Rational nb(b, a), nc(c, a);
      nb.canonicalize();
      nc.canonicalize();
      if (!quads.insert({nb, nc}).second) continue;
      out.poly = out.poly * ip({c, b, a});
    } else {
      const long b = pos(rng);
      const long a = small(rng);
      Rational root(a, b);
      root.canonicalize();
      if (!roots.insert(root).second) continue;
      out.poly = out.poly * ip({-a, b});
      ++out.real;
    }
  }
  if (rng() % 2) out.poly = Integer(-1) * out.poly;
  return out;
}

// ---- resultants -----------------------------------------------------------

// Sylvester determinant by fraction-free (Bareiss) elimination.
inline Integer sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  const int m = f.degree();
  const int n = g.degree();
  const int size = m + n;
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(size), std::vector<Integer>(static_cast<std::size_t>(size), 0));
  for (int row = 0; row < n; ++row) {
    for (int i = 0; i <= m; ++i) a[row][row + i] = f[static_cast<std::size_t>(m - i)];
  }
  for (int row = 0; row < m; ++row) {
    for (int i = 0; i <= n; ++i) a[n + row][row + i] = g[static_cast<std::size_t>(n - i)];
  }
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < size; ++r) {
        if (a[r][k] != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

inline IntPoly random_int_poly(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  for (auto& x : v) x = c(rng);
  if (v.back() == 0) v.back() = 1;
  return IntPoly(std::move(v));
}

// ---- factor degrees over small prime fields --------------------------------

using Vec = std::vector<int>;  // coefficients in [0, q), lowest first

inline void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Vec mul(const Vec& a, const Vec& b, int q) {
  Vec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % q;
  }
  trim(out);
  return out;
}

// a / b for monic b when the division is exact.
inline std::optional<Vec> exact_div(Vec a, const Vec& b, int q) {
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return std::nullopt;
  Vec quo(a.size() - b.size() + 1, 0);
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    const int c = a[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& x = a[static_cast<std::size_t>(k - db + i)];
      x = ((x - c * b[static_cast<std::size_t>(i)]) % q + q) % q;
    }
  }
  trim(a);
  if (!a.empty()) return std::nullopt;
  return quo;
}

inline long ipow(long b, int e) {
  long out = 1;
  while (e-- > 0) out *= b;
  return out;
}

inline Vec monic_from_index(long index, int degree, int q) {
  Vec out(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(index % q);
    index /= q;
  }
  out[static_cast<std::size_t>(degree)] = 1;
  return out;
}

inline long index_of(const Vec& monic, int q) {
  long idx = 0;
  for (int i = static_cast<int>(monic.size()) - 2; i >= 0; --i) idx = idx * q + monic[static_cast<std::size_t>(i)];
  return idx;
}

// Monic irreducibles by degree: whatever is not a product of two monic
// polynomials of positive degree.
inline std::map<int, std::vector<Vec>> monic_irreducibles(int q, int max_degree) {
  std::map<int, std::vector<Vec>> out;
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<bool> reducible(static_cast<std::size_t>(ipow(q, d)), false);
    for (int i = 1; 2 * i <= d; ++i) {
      for (long a = 0; a < ipow(q, i); ++a) {
        const Vec pa = monic_from_index(a, i, q);
        for (long b = 0; b < ipow(q, d - i); ++b) {
          reducible[static_cast<std::size_t>(index_of(mul(pa, monic_from_index(b, d - i, q), q), q))] = true;
        }
      }
    }
    for (long idx = 0; idx < ipow(q, d); ++idx) {
      if (!reducible[static_cast<std::size_t>(idx)]) out[d].push_back(monic_from_index(idx, d, q));
    }
  }
  return out;
}

// Factor degrees (descending) by trial division; nullopt on a repeated
// factor. `irr` must hold every degree up to half the degree of g.
inline std::optional<std::vector<int>> trial_division_degrees(Vec g, int q, const std::map<int, std::vector<Vec>>& irr) {
  std::vector<int> degrees;
  for (int d = 1; static_cast<int>(g.size()) - 1 >= 1; ++d) {
    const int rem = static_cast<int>(g.size()) - 1;
    if (rem < 2 * d) {  // no factor below degree d is left
      degrees.push_back(rem);
      break;
    }
    for (const auto& p : irr.at(d)) {
      int mult = 0;
      while (auto quo = exact_div(g, p, q)) {
        g = *quo;
        ++mult;
      }
      if (mult > 1) return std::nullopt;
      if (mult == 1) degrees.push_back(d);
    }
  }
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

}  // namespace oracle
