#include <doctest.h>

#include <optional>
#include <random>

#include "galois/error.hpp"
#include "galois/parse.hpp"
#include "galois/poly.hpp"

using namespace galois;

namespace {

IntPoly ip(std::initializer_list<long> xs) {
  std::vector<Integer> c;
  for (long x : xs) c.emplace_back(x);
  return IntPoly(std::move(c));
}

RationalPoly random_rational_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  if (c.back() == 0) c.back() = Rational(1, 3);
  return RationalPoly(std::move(c));
}

std::optional<ErrorCode> code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("normalize_monic_integer: worked cases") {
  {
    const auto n = normalize_monic_integer(parse_poly("x^2 + 1/2x + 1/4"));
    CHECK(n.poly == ip({1, 1, 1}));
    CHECK(n.scaling.scale == 2);
  }
  {
    const auto f = parse_poly("x^5 - x - 1");
    const auto n = normalize_monic_integer(f);
    CHECK(n.poly == ip({-1, -1, 0, 0, 0, 1}));
    CHECK(n.scaling.scale == 1);
  }
  {
    const auto n = normalize_monic_integer(parse_poly("2x^3 - 3x^2 + 2"));
    CHECK(n.poly == ip({8, 0, -3, 1}));
    CHECK(n.scaling.scale == 2);
  }
  {
    const auto n = normalize_monic_integer(parse_poly("x^3 + 1/8"));
    CHECK(n.poly == ip({1, 0, 0, 1}));
    CHECK(n.scaling.scale == 2);
  }
  {
    const auto n = normalize_monic_integer(parse_poly("528x^23 - 552x^22 + 23"));
    CHECK(n.scaling.scale == 66);
    CHECK(n.poly[22] == -69);
  }
  {
    const auto n = normalize_monic_integer(parse_poly("x^2 + 1/1000003"));
    CHECK(n.scaling.scale == 1000003);
    CHECK(n.poly == ip({1000003, 0, 1}));
  }
  CHECK(code_of([] { normalize_monic_integer(parse_poly("5")); }) == ErrorCode::DegreeZero);
  CHECK(!normalize_monic_integer(parse_poly("2x+1")).scaling.relation().empty());
}

TEST_CASE("normalize_monic_integer: g(d v) = d^n f_monic(v)") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(1, 9);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 15);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_rational_poly(rng, deg(rng));
    const auto norm = normalize_monic_integer(f);
    REQUIRE(norm.poly.is_monic());
    REQUIRE(norm.scaling.scale >= 1);
    const Rational lc = f.leading();
    for (int k = 0; k < 3; ++k) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      Rational dn = 1;
      for (int i = 0; i < f.degree(); ++i) dn *= Rational(norm.scaling.scale);
      const Rational lhs = eval_at_rational(to_rational(norm.poly), Rational(norm.scaling.scale) * v);
      const Rational rhs = dn * eval_at_rational(f, v) / lc;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("derivative") {
  CHECK(derivative(ip({1, 0, 1})) == ip({0, 2}));
  CHECK(derivative(parse_poly("x^11 + 5x^7 + 1")) == parse_poly("11x^10 + 35x^6"));
  CHECK(derivative(ip({4, 3})) == ip({3}));
  CHECK(code_of([] { derivative(ip({7})); }) == ErrorCode::PreconditionViolated);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_rational_poly(rng, 2 + trial % 8);
    const auto g = random_rational_poly(rng, 2 + trial % 5);
    const auto sum = f + g;
    if (sum.degree() < 1) continue;
    CHECK(derivative(sum) == derivative(f) + derivative(g));
  }
}

TEST_CASE("evaluation") {
  CHECK(eval_at_rational(parse_poly("x^2 + 1"), Rational(2)) == 5);
  CHECK(eval_at_rational(parse_poly("x^2 + 1"), Rational(1, 2)) == Rational(5, 4));
  const auto ex = parse_poly("x^11+5x^7-4x^6-20x^5+4x^4+20x^3+1");
  CHECK(eval_at_rational(ex, Rational(1)) == 7);
  CHECK(eval_at_rational(ex, Rational(0)) == 1);
  CHECK(eval_at_integer(ip({-6, 11, -6, 1}), Integer(3)) == 0);
  CHECK(sign_at(ip({-2, 0, 1}), Rational(3, 2)) == 1);
  CHECK(sign_at(ip({-2, 0, 1}), Rational(1)) == -1);
}

TEST_CASE("arithmetic and helpers") {
  CHECK(ip({1, 1}) * ip({-1, 1}) == ip({-1, 0, 1}));
  CHECK((ip({1, 2, 3}) - ip({1, 2, 3})).is_zero());
  CHECK((ip({1, 2, 3}) - ip({0, 0, 3})).degree() == 1);
  CHECK(content(ip({6, -9, 12})) == 3);
  CHECK(primitive_part(ip({-6, 9, -12})) == ip({2, -3, 4}));
  const auto [F, D] = clear_denominators(parse_poly("1/2x^2 + 1/3"));
  CHECK(D == 6);
  CHECK(F == ip({2, 0, 3}));
  // gcd((x-1)(x+2), (x-1)(x-3)) = x - 1
  CHECK(gcd(ip({-2, 1, 1}), ip({3, -4, 1})) == ip({-1, 1}));
  CHECK(gcd(ip({1, 0, 1}), ip({-1, 0, 1})).degree() == 0);
  CHECK(to_text(ip({-1, -1, 0, 0, 0, 1})) == "x^5 - x - 1");
  CHECK(to_text(parse_poly("1/2x^2-3")) == "1/2*x^2 - 3");
}

TEST_CASE("pseudo_remainder matches rational division") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> a(7), b(4);
    for (auto& x : a) x = c(rng);
    for (auto& x : b) x = c(rng);
    a.back() = 1 + trial % 3;
    b.back() = 2 + trial % 2;
    const IntPoly A(a), B(b);
    const IntPoly R = pseudo_remainder(A, B);
    CHECK(R.degree() < B.degree());
    // R = lc(B)^(deg A - deg B + 1) * (remainder over Q)
    RationalPoly rem = to_rational(A);
    const RationalPoly rb = to_rational(B);
    while (!rem.is_zero() && rem.degree() >= rb.degree()) {
      const Rational k = rem.leading() / rb.leading();
      rem = rem - RationalPoly::monomial(k, static_cast<std::size_t>(rem.degree() - rb.degree())) * rb;
    }
    Rational scale = 1;
    for (int i = 0; i < A.degree() - B.degree() + 1; ++i) scale *= Rational(B.leading());
    CHECK(to_rational(R) == scale * rem);
  }
}
