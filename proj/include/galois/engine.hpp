#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galois/cycle_type.hpp"
#include "galois/groups.hpp"
#include "galois/poly.hpp"
#include "galois/resultant.hpp"

namespace galois {

enum class Method { Jordan, Corollary, SieveUnique, SieveAmbiguous, OutOfCoverage };
enum class Irreducibility { Certified, Assumed };
enum class OutputFormat { Text, Json };

std::string_view to_string(Method m);
std::string_view to_string(Irreducibility i);

struct EvidenceEntry {
  std::uint64_t prime = 0;
  CycleType observed;
  std::vector<std::string> eliminated;
};

struct CandidateReport {
  std::string name;
  std::optional<std::string> caveat;
};

struct Verdict {
  std::string input;          // canonical text of the polynomial analyzed
  std::string monic_integer;  // normalized polynomial reduced modulo primes
  Integer scale{1};
  int p = 0;
  int real_roots = 0;
  int r = 0;
  int s = 0;
  Discriminant discriminant;
  Method method = Method::OutOfCoverage;
  std::optional<std::string> group;
  std::vector<CandidateReport> remaining_candidates;
  std::vector<EvidenceEntry> evidence;  // ascending primes
  std::map<CycleType, int> type_frequencies;
  int primes_used = 0;
  Irreducibility irreducibility = Irreducibility::Certified;
  std::string irreducibility_detail;
  std::string gate_detail;
  std::vector<std::string> warnings;
  /// Filled only in cross-check mode: the sieve's answer on a gated input.
  std::optional<std::string> sieve_cross_check;
};

struct EngineConfig {
  int prime_budget = 200;
  std::uint64_t start_prime = 2;
  int irreducibility_budget = 25;
  OutputFormat emit = OutputFormat::Text;
  /// Run the sieve when r = 0. Unsound: groups without a conjugation
  /// constraint outside the database may be missed.
  bool force_sieve = false;
  /// Proceed when irreducibility could not be certified within budget.
  bool assume_irreducible = false;
  /// Also run the sieve when a gate fires and compare the answers.
  bool cross_check_sieve = false;
  /// Signature database; the embedded one when null.
  const SignatureDB* db = nullptr;
};

/// Galois group of an irreducible polynomial of prime degree p >= 5 over Q.
///
/// Pipeline: monic integer normalization, discriminant (a repeated root is
/// rejected), irreducibility certificate, Sturm root count, the corollary
/// and Jordan gates, and otherwise mod-q elimination against the signature
/// database (or, beyond its coverage, the list allowed by the
/// classification of doubly transitive groups of prime degree).
///
/// Throws Error with NonPrimeDegree, ZeroDiscriminant, NotIrreducible,
/// IrreducibilityUnknown or NoNonrealRoots for rejected input, and
/// ParityViolation / EmptyCandidates / NoConjugationWitness when an
/// internal consistency check fails.
Verdict analyze(const RationalPoly& f, const EngineConfig& cfg = {});

/// Every violated Verdict invariant, empty when coherent.
std::vector<std::string> verdict_violations(const Verdict& v);

enum class IrreducibilityStatus { Certified, Reducible, Unknown };

struct IrreducibilityReport {
  IrreducibilityStatus status = IrreducibilityStatus::Unknown;
  /// Prime modulo which g is irreducible, when that is the certificate.
  std::optional<std::uint64_t> irreducible_mod;
  std::optional<Integer> rational_root;
  std::optional<int> repeated_factor_degree;
  int primes_examined = 0;
  /// Degrees a rational factor could still have (empty once certified).
  std::vector<int> possible_factor_degrees;

  std::string describe() const;
};

/// Irreducibility of a monic integer polynomial without factoring over Q:
/// a repeated factor or an integer root proves reducibility; irreducibility
/// mod a good prime, or an empty intersection of factor-degree subset sums
/// over good primes, proves irreducibility. Anything else is Unknown after
/// `budget` good primes.
IrreducibilityReport irreducibility_precheck(const IntPoly& g, int budget);

/// (n-1) x^n - n x^(n-1) + t. Throws DegenerateT for t = 0 or 1.
RationalPoly family_jordan(int n, const Rational& t);

/// (22 m^2 + 506) x^23 - (23 m^2 + 529) x^22 + 23. Throws ZeroM for m = 0.
IntPoly family_a23(const Integer& m);

std::string to_json(const Verdict& v);
std::string to_text(const Verdict& v);

}  // namespace galois
