#include "galois/realroots.hpp"

namespace galois {

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int sgn : signs) {
    if (sgn == 0) continue;
    if (last != 0 && sgn != last) ++count;
    last = sgn;
  }
  return count;
}

// Pseudo-remainder with the sign of the true remainder: prem scales by
// lc(b)^(deg a - deg b + 1), which is negative for an odd power of a
// negative leading coefficient.
IntPoly signed_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r = pseudo_remainder(a, b);
  const int steps = a.degree() - b.degree() + 1;
  if (b.leading() < 0 && steps % 2 != 0) r = -r;
  return r;
}

IntPoly positive_scaled(const IntPoly& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  std::vector<Integer> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

void collect_integer_roots(const IntPoly& f, const SturmSequence& chain, const Integer& lo, const Integer& hi,
                           int count, std::vector<Integer>& out) {
  // Invariant: exactly `count` > 0 roots in (lo, hi].
  if (hi - lo == 1) {
    if (eval_at_integer(f, hi) == 0) out.push_back(hi);
    return;
  }
  Integer mid = lo + (hi - lo) / 2;
  const int left = count_roots_in(chain, Rational(lo), Rational(mid));
  if (left > 0) collect_integer_roots(f, chain, lo, mid, left, out);
  if (count - left > 0) collect_integer_roots(f, chain, mid, hi, count - left, out);
}

}  // namespace

SturmSequence sturm_sequence(const IntPoly& f) {
  if (f.degree() < 1) throw Error(ErrorCode::PreconditionViolated, "Sturm sequence needs degree >= 1");
  SturmSequence chain;
  chain.polys.push_back(positive_scaled(f));
  chain.polys.push_back(positive_scaled(derivative(f)));
  while (chain.polys.back().degree() > 0) {
    const IntPoly& a = chain.polys[chain.polys.size() - 2];
    const IntPoly& b = chain.polys.back();
    IntPoly next = -signed_remainder(a, b);
    if (next.is_zero()) break;
    chain.polys.push_back(positive_scaled(next));
  }
  if (chain.polys.back().degree() > 0) {
    throw Error(ErrorCode::NotSquarefree,
                "gcd(f, f') has degree " + std::to_string(chain.polys.back().degree()) + " (repeated root)");
  }
  return chain;
}

int sign_variations_at(const SturmSequence& chain, const Rational& v) {
  std::vector<int> signs;
  signs.reserve(chain.polys.size());
  for (const auto& p : chain.polys) signs.push_back(sign_at(p, v));
  return variations(signs);
}

int sign_variations_at_neg_infinity(const SturmSequence& chain) {
  std::vector<int> signs;
  for (const auto& p : chain.polys) {
    int sg = sgn(p.leading());
    if (p.degree() % 2 != 0) sg = -sg;
    signs.push_back(sg);
  }
  return variations(signs);
}

int sign_variations_at_pos_infinity(const SturmSequence& chain) {
  std::vector<int> signs;
  for (const auto& p : chain.polys) signs.push_back(sgn(p.leading()));
  return variations(signs);
}

int count_roots_in(const SturmSequence& chain, const Rational& lo, const Rational& hi) {
  if (hi <= lo) return 0;
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

RootCount count_real_roots(const IntPoly& f) {
  const SturmSequence chain = sturm_sequence(f);
  RootCount rc;
  rc.real = sign_variations_at_neg_infinity(chain) - sign_variations_at_pos_infinity(chain);
  rc.nonreal_r = f.degree() - rc.real;
  rc.s = rc.nonreal_r / 2;
  return rc;
}

RootCount count_real_roots(const RationalPoly& f) { return count_real_roots(clear_denominators(f).first); }

std::vector<Integer> integer_roots(const IntPoly& f) {
  const SturmSequence chain = sturm_sequence(f);
  // Cauchy bound: |root| <= 1 + max |a_i / a_n| <= 1 + max |a_i|.
  Integer bound = 0;
  for (const auto& c : f.coeffs()) {
    Integer a = abs(c);
    if (a > bound) bound = a;
  }
  bound += 1;
  std::vector<Integer> roots;
  const Integer lo = -bound - 1;
  const int total = count_roots_in(chain, Rational(lo), Rational(bound));
  if (total > 0) collect_integer_roots(f, chain, lo, bound, total, roots);
  return roots;
}

}  // namespace galois
