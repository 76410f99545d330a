#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include <json.hpp>

#include "galois/engine.hpp"
#include "galois/error.hpp"
#include "galois/modp.hpp"
#include "galois/parse.hpp"
#include "galois/realroots.hpp"

using namespace galois;

namespace {

IntPoly ip(std::initializer_list<long> xs) {
  std::vector<Integer> c;
  for (long x : xs) c.emplace_back(x);
  return IntPoly(std::move(c));
}

Verdict run(std::string_view text, EngineConfig cfg = {}) { return analyze(parse_poly(text), cfg); }

std::optional<ErrorCode> code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

std::vector<std::string> candidate_names(const Verdict& v) {
  std::vector<std::string> out;
  for (const auto& c : v.remaining_candidates) out.push_back(c.name);
  return out;
}

// prod (x - a_i) * prod (x^2 + b_j) + 1 has the real-root count of the
// product when the roots are well separated; the count is re-measured
// rather than assumed.
IntPoly perturbed_product(std::mt19937_64& rng, int p, int quadratics) {
  IntPoly f = ip({1});
  std::vector<long> roots;
  for (long a = -(p / 2) * 3; static_cast<int>(roots.size()) < p - 2 * quadratics; a += 3) roots.push_back(a);
  for (long a : roots) f = f * ip({-a, 1});
  for (int j = 0; j < quadratics; ++j) f = f * ip({static_cast<long>(1 + rng() % 5 + 6 * j), 0, 1});
  return f + ip({static_cast<long>(1 + 2 * (rng() % 3))});
}

}  // namespace

TEST_CASE("analyze: degree 11 with one real root") {
  const auto v = run("x^11+5x^7-4x^6-20x^5+4x^4+20x^3+1");
  CHECK(v.p == 11);
  CHECK(v.r == 10);
  CHECK(v.s == 5);
  CHECK(v.discriminant.value == Rational(Integer(-59) * Integer("1391212936091429123033")));
  CHECK(!v.discriminant.is_square);
  CHECK(v.method == Method::SieveUnique);
  CHECK(v.group == "S11");
  CHECK(v.irreducibility == Irreducibility::Certified);
  // the first evidence entry is taken against {S11, D11, (11,4)}
  REQUIRE(!v.evidence.empty());
  std::vector<std::string> eliminated;
  for (const auto& e : v.evidence) eliminated.insert(eliminated.end(), e.eliminated.begin(), e.eliminated.end());
  std::sort(eliminated.begin(), eliminated.end());
  CHECK(eliminated == std::vector<std::string>{"(11,4)", "D11"});
  CHECK(verdict_violations(v).empty());
}

TEST_CASE("analyze: degree-23 family is A23 with no primes consumed") {
  for (int m = 1; m <= 3; ++m) {
    const auto v = analyze(to_rational(family_a23(m)));
    CHECK(v.group == "A23");
    CHECK(v.method == Method::SieveUnique);
    CHECK(v.primes_used == 0);
    CHECK(v.discriminant.is_square);
    CHECK(v.real_roots <= 3);
    CHECK(verdict_violations(v).empty());
  }
}

TEST_CASE("analyze: quintics") {
  auto v = run("x^5 - x - 1");
  CHECK(v.r == 4);
  CHECK(v.discriminant.value == 2869);
  CHECK(v.method == Method::SieveUnique);
  CHECK(v.group == "S5");

  v = run("x^5 - 4x + 2");  // three real roots: one transposition
  CHECK(v.s == 1);
  CHECK(v.method == Method::Jordan);
  CHECK(v.group == "S5");

  v = run("x^5 + 20x + 16");
  CHECK(v.discriminant.is_square);
  CHECK(v.method == Method::SieveUnique);
  CHECK(v.group == "A5");

  // dihedral quintic: A5 is never eliminated by D5-shaped Frobenius types
  v = run("x^5 - 5x + 12");
  CHECK(v.discriminant.is_square);
  CHECK(v.method == Method::SieveAmbiguous);
  CHECK(!v.group);
  CHECK(candidate_names(v) == std::vector<std::string>{"A5", "D5"});
  CHECK(v.primes_used == 200);
  for (const auto& [type, n] : v.type_frequencies) {
    CHECK((type == CycleType({5}) || type == CycleType({2, 2, 1}) || type.is_identity()));
  }
  CHECK(verdict_violations(v).empty());

  v = run("x^5 - 2", EngineConfig{.prime_budget = 40});
  CHECK(v.method == Method::SieveAmbiguous);
  CHECK(candidate_names(v) == std::vector<std::string>{"S5", "F20"});
  CHECK(v.primes_used == 40);
}

TEST_CASE("analyze: rational input is normalized") {
  const auto v = run("1/3x^5 - 1/3x - 1/3");
  CHECK(v.group == "S5");
  const auto w = run("2x^5 - 8x + 4");
  CHECK(w.method == Method::Jordan);
  CHECK(w.scale == 1);
  const auto u = run("3x^5 + x + 1");
  CHECK(u.scale == 3);
  CHECK(u.monic_integer == "x^5 + 27*x + 81");
}

TEST_CASE("analyze: rejections") {
  CHECK(code_of([] { run("x^4 + 1"); }) == ErrorCode::NonPrimeDegree);
  CHECK(code_of([] { run("x^3 - 2"); }) == ErrorCode::NonPrimeDegree);
  CHECK(code_of([] { run("x^9 - x - 1"); }) == ErrorCode::NonPrimeDegree);
  CHECK(code_of([] { run("x^5 - 1"); }) == ErrorCode::NotIrreducible);
  CHECK(code_of([] { run("x^5 - 2x^3 + x"); }) == ErrorCode::ZeroDiscriminant);
  CHECK(code_of([] { run("x^5 - 5x^3 + 4x - 1"); }) == ErrorCode::NoNonrealRoots);
  // (x^2 + 1)(x^3 + x + 1): no rational root, degrees 2 + 3 never separate
  CHECK(code_of([] { run("x^5 + 2x^3 + x^2 + x + 1"); }) == ErrorCode::IrreducibilityUnknown);
}

TEST_CASE("analyze: overrides") {
  EngineConfig force;
  force.force_sieve = true;
  const auto v = run("x^5 - 5x^3 + 4x - 1", force);
  CHECK(v.r == 0);
  CHECK(!v.warnings.empty());
  CHECK(v.warnings.front().find("UNSOUND-FOR-r=0") != std::string::npos);
  CHECK(verdict_violations(v).empty());

  EngineConfig assume;
  assume.assume_irreducible = true;
  assume.irreducibility_budget = 1;
  // irreducible, but one prime (type (9)(2)) leaves factor degrees 2 and 9 open
  const auto w = run("x^11+5x^7-4x^6-20x^5+4x^4+20x^3+1", assume);
  CHECK(w.irreducibility == Irreducibility::Assumed);
  CHECK(w.group == "S11");
  assume.assume_irreducible = false;
  CHECK(code_of([&] { run("x^11+5x^7-4x^6-20x^5+4x^4+20x^3+1", assume); }) == ErrorCode::IrreducibilityUnknown);
}

TEST_CASE("analyze: beyond the database") {
  const auto v = run("x^31 - x - 1");
  CHECK(v.method == Method::OutOfCoverage);
  CHECK(!v.group);
  const auto names = candidate_names(v);
  CHECK(names.front() == "S31");
  CHECK(std::find(names.begin(), names.end(), "L(5,2) <= G <= Aut(L(5,2))") != names.end());
  CHECK(std::find(names.begin(), names.end(), "L(3,5) <= G <= Aut(L(3,5))") != names.end());
  CHECK(verdict_violations(v).empty());
}

TEST_CASE("analyze: corollary gate") {
  std::mt19937_64 rng(1);
  const IntPoly f = perturbed_product(rng, 11, 2);
  REQUIRE(count_real_roots(f).nonreal_r == 4);
  const auto v = analyze(to_rational(f));
  CHECK(v.method == Method::Corollary);
  CHECK(v.group == (v.discriminant.is_square ? "A11" : "S11"));
}

TEST_CASE("gated verdicts agree with the sieve") {
  std::mt19937_64 rng(2);
  int gated = 0;
  for (int p : {7, 11, 13, 17, 19, 23, 29}) {
    for (int quads = 1; quads <= 5; ++quads) {
      const IntPoly f = perturbed_product(rng, p, quads);
      EngineConfig cfg;
      cfg.cross_check_sieve = true;
      Verdict v;
      try {
        v = analyze(to_rational(f), cfg);
      } catch (const Error& e) {
        // unlucky perturbation: reducible or uncertified; skip
        continue;
      }
      if (v.method != Method::Jordan && v.method != Method::Corollary) continue;
      ++gated;
      CAPTURE(to_text(f));
      REQUIRE(v.sieve_cross_check.has_value());
      CHECK(*v.sieve_cross_check == "unique: " + *v.group);
    }
  }
  CHECK(gated >= 10);
}

TEST_CASE("verdicts are deterministic and coherent on random inputs") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coeff(-9, 9);
  int analyzed = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int p = std::vector<int>{5, 7, 11, 13}[trial % 4];
    std::vector<Integer> c(static_cast<std::size_t>(p) + 1);
    for (auto& x : c) x = coeff(rng);
    c.back() = 1 + trial % 2;
    const RationalPoly f = to_rational(IntPoly(c));
    if (f.degree() != p) continue;
    EngineConfig cfg;
    cfg.prime_budget = 60;
    try {
      const auto a = analyze(f, cfg);
      const auto b = analyze(f, cfg);
      CHECK(to_json(a) == to_json(b));
      CAPTURE(a.input);
      CHECK(verdict_violations(a).empty());
      ++analyzed;
    } catch (const Error& e) {
      CHECK(is_input_rejection(e.code()));
    }
  }
  CHECK(analyzed > 50);
}

TEST_CASE("irreducibility_precheck") {
  auto rep = irreducibility_precheck(ip({1, 0, 1}), 25);
  CHECK(rep.status == IrreducibilityStatus::Certified);
  rep = irreducibility_precheck(ip({-1, 0, 1}), 25);
  CHECK(rep.status == IrreducibilityStatus::Reducible);
  REQUIRE(rep.rational_root);
  CHECK(abs(*rep.rational_root) == 1);
  rep = irreducibility_precheck(ip({1, 0, 1}) * ip({2, 0, 1}), 25);
  CHECK(rep.status == IrreducibilityStatus::Unknown);
  CHECK(rep.possible_factor_degrees == std::vector<int>{2});
  rep = irreducibility_precheck(ip({-1, -1, 0, 0, 0, 1}), 25);
  CHECK(rep.status == IrreducibilityStatus::Certified);
  rep = irreducibility_precheck(ip({1, -2, 1}), 25);
  CHECK(rep.status == IrreducibilityStatus::Reducible);
  CHECK(rep.repeated_factor_degree == 1);
  CHECK(code_of([] { irreducibility_precheck(ip({1, 2}), 5); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("families") {
  CHECK(family_jordan(3, 2) == parse_poly("2x^3 - 3x^2 + 2"));
  CHECK(to_rational(family_a23(1)) == parse_poly("528x^23 - 552x^22 + 23"));
  CHECK(to_rational(family_a23(2)) == parse_poly("594x^23 - 621x^22 + 23"));
  CHECK(family_a23(-2) == family_a23(2));
  CHECK(code_of([] { family_a23(0); }) == ErrorCode::ZeroM);
  CHECK(code_of([] { family_jordan(5, 1); }) == ErrorCode::DegenerateT);
  CHECK(code_of([] { family_jordan(5, 0); }) == ErrorCode::DegenerateT);
  // t = 23/(m^2+23) at n = 23 clears to the integer family
  for (long m = 1; m <= 3; ++m) {
    const auto member = family_jordan(23, Rational(23, m * m + 23));
    const auto [cleared, denom] = clear_denominators(member);
    CHECK(primitive_part(cleared) == primitive_part(family_a23(m)));
  }
}

TEST_CASE("json output") {
  const auto v = run("x^5 - x - 1");
  const auto doc = nlohmann::json::parse(to_json(v));
  CHECK(doc["p"] == "5");
  CHECK(doc["r"] == "4");
  CHECK(doc["discriminant"]["value"] == "2869");
  CHECK(doc["discriminant"]["is_square"] == false);
  CHECK(doc["method"] == "SIEVE_UNIQUE");
  CHECK(doc["group"] == "S5");
  CHECK(doc["evidence"][0]["prime"].is_string());
  CHECK(doc["irreducibility"] == "CERTIFIED");
  const auto text = to_text(v);
  CHECK(text.find("S5") != std::string::npos);
}
