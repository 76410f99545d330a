#include "galois/engine.hpp"

#include <algorithm>
#include <set>

#include "galois/error.hpp"
#include "galois/modp.hpp"
#include "galois/realroots.hpp"

namespace galois {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Jordan: return "JORDAN";
    case Method::Corollary: return "COROLLARY";
    case Method::SieveUnique: return "SIEVE_UNIQUE";
    case Method::SieveAmbiguous: return "SIEVE_AMBIGUOUS";
    case Method::OutOfCoverage: return "OUT_OF_COVERAGE";
  }
  return "?";
}

std::string_view to_string(Irreducibility i) { return i == Irreducibility::Certified ? "CERTIFIED" : "ASSUMED"; }

namespace {

// Proper factor degrees compatible with one factorization pattern mod q.
std::vector<bool> subset_sums(const CycleType& t, int n) {
  std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
  reach[0] = true;
  for (int part : t.parts()) {
    for (int k = n; k >= part; --k) {
      if (reach[static_cast<std::size_t>(k - part)]) reach[static_cast<std::size_t>(k)] = true;
    }
  }
  return reach;
}

struct SieveRun {
  SieveState state;
  std::vector<EvidenceEntry> evidence;
  std::map<CycleType, int> frequencies;
};

SieveRun run_sieve(const IntPoly& g, const Discriminant& disc, int p, int s, const EngineConfig& cfg,
                   const SignatureDB& db) {
  SieveRun run{candidates_for(db, p, s, disc.is_square), {}, {}};
  if (run.state.is_unique()) return run;
  GoodPrimeStream primes(g, disc, cfg.start_prime);
  for (int used = 0; used < cfg.prime_budget && !run.state.is_unique(); ++used) {
    const std::uint64_t q = primes.next();
    const CycleType observed = frobenius_cycle_type(reduce_mod(g, q));
    if (disc.is_square && !observed.is_even()) {
      throw Error(ErrorCode::ParityViolation, "odd type " + observed.to_string() + " at q = " + std::to_string(q) +
                                                  " although the discriminant is a square");
    }
    const auto before = run.state.survivors();
    run.state = eliminate(run.state, observed, q);
    const auto after = run.state.survivors();
    EvidenceEntry entry{q, observed, {}};
    for (const auto& name : before) {
      if (std::find(after.begin(), after.end(), name) == after.end()) entry.eliminated.push_back(name);
    }
    run.evidence.push_back(std::move(entry));
    ++run.frequencies[observed];
  }
  return run;
}

std::vector<CandidateReport> survivors_of(const SieveState& state) {
  std::vector<CandidateReport> out;
  for (const auto& c : state.candidates()) {
    if (c.alive()) out.push_back({c.name, c.caveat});
  }
  return out;
}

// Beyond the database: what the classification of doubly transitive groups
// of prime degree still allows once a transposition-free conjugation rules
// nothing out.
std::vector<CandidateReport> classification_candidates(int p, int s, bool square) {
  std::vector<CandidateReport> out;
  const CycleType conj = CycleType::conjugation(p, s);
  if (square) {
    if (!conj.is_even()) {
      throw Error(ErrorCode::NoConjugationWitness,
                  "square discriminant but conjugation " + conj.to_string() + " is odd");
    }
    out.push_back({alternating_name(p), std::nullopt});
  } else {
    out.push_back({symmetric_name(p), std::nullopt});
  }
  if (p == 11) {
    out.push_back({"L(11)", std::nullopt});
    out.push_back({"M11", std::nullopt});
  }
  if (p == 23) out.push_back({"M23", "M23 is not known to occur as a Galois group over Q"});
  for (const auto& [k, q] : projective_parameters(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(p))) {
    const auto tag = std::to_string(k) + "," + std::to_string(q);
    out.push_back({"L(" + tag + ") <= G <= Aut(L(" + tag + "))", std::nullopt});
  }
  // Affine subgroups p:k of AGL(1, p): elements are p-cycles or fix one
  // point with equal cycles, so conjugation must be (2)^((p-1)/2)(1).
  if (2 * s + 1 == p) out.push_back({std::to_string(p) + ":k <= AGL(1," + std::to_string(p) + "), k even", std::nullopt});
  return out;
}

}  // namespace

std::string IrreducibilityReport::describe() const {
  switch (status) {
    case IrreducibilityStatus::Certified:
      if (irreducible_mod) return "irreducible mod " + std::to_string(*irreducible_mod);
      if (primes_examined == 0) return "no rational root and no room for a nonlinear factor";
      return "no factor degree survives " + std::to_string(primes_examined) + " good primes";
    case IrreducibilityStatus::Reducible:
      if (repeated_factor_degree) return "repeated factor of degree " + std::to_string(*repeated_factor_degree);
      if (rational_root) return "rational root " + rational_root->get_str();
      return "reducible";
    case IrreducibilityStatus::Unknown: {
      std::string out = "undecided after " + std::to_string(primes_examined) + " good primes; factor degrees left:";
      for (int d : possible_factor_degrees) out += " " + std::to_string(d);
      return out;
    }
  }
  return "?";
}

IrreducibilityReport irreducibility_precheck(const IntPoly& g, int budget) {
  IrreducibilityReport rep;
  const int n = g.degree();
  if (n < 1) throw Error(ErrorCode::DegreeZero, "constant polynomial");
  if (!g.is_monic()) throw Error(ErrorCode::PreconditionViolated, "irreducibility_precheck needs a monic polynomial");
  if (n == 1) {
    rep.status = IrreducibilityStatus::Certified;
    return rep;
  }

  const IntPoly common = gcd(g, derivative(g));
  if (common.degree() > 0) {
    rep.status = IrreducibilityStatus::Reducible;
    rep.repeated_factor_degree = common.degree();
    return rep;
  }
  // Monic with integer coefficients: rational roots are integers.
  if (const auto roots = integer_roots(g); !roots.empty()) {
    rep.status = IrreducibilityStatus::Reducible;
    rep.rational_root = roots.front();
    return rep;
  }

  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  possible[0] = false;
  possible[static_cast<std::size_t>(n)] = false;
  possible[1] = false;
  possible[static_cast<std::size_t>(n - 1)] = false;  // no linear factor
  auto any_left = [&] { return std::find(possible.begin(), possible.end(), true) != possible.end(); };

  if (any_left()) {
    GoodPrimeStream primes(g, discriminant(g), 2);
    for (; rep.primes_examined < budget && any_left(); ++rep.primes_examined) {
      const std::uint64_t q = primes.next();
      const CycleType t = frobenius_cycle_type(reduce_mod(g, q));
      if (t.parts().size() == 1) {
        rep.irreducible_mod = q;
        ++rep.primes_examined;
        std::fill(possible.begin(), possible.end(), false);
        break;
      }
      const auto sums = subset_sums(t, n);
      for (std::size_t k = 0; k < possible.size(); ++k) possible[k] = possible[k] && sums[k];
    }
  }
  if (!any_left()) {
    rep.status = IrreducibilityStatus::Certified;
    return rep;
  }
  rep.status = IrreducibilityStatus::Unknown;
  for (int k = 1; k < n; ++k) {
    if (possible[static_cast<std::size_t>(k)]) rep.possible_factor_degrees.push_back(k);
  }
  return rep;
}

Verdict analyze(const RationalPoly& f, const EngineConfig& cfg) {
  const SignatureDB& db = cfg.db ? *cfg.db : SignatureDB::embedded();
  const int p = f.degree();
  if (p < 5 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::NonPrimeDegree, "degree " + std::to_string(p) + " is not a prime >= 5");
  }

  Verdict v;
  v.input = to_text(f);
  v.p = p;
  const MonicNormalization norm = normalize_monic_integer(f);
  const IntPoly& g = norm.poly;
  v.monic_integer = to_text(g);
  v.scale = norm.scaling.scale;

  // Needed before the irreducibility check: good primes avoid its divisors.
  v.discriminant = discriminant(f);

  const IrreducibilityReport irr = irreducibility_precheck(g, cfg.irreducibility_budget);
  v.irreducibility_detail = irr.describe();
  switch (irr.status) {
    case IrreducibilityStatus::Reducible:
      throw Error(ErrorCode::NotIrreducible, irr.describe());
    case IrreducibilityStatus::Unknown:
      if (!cfg.assume_irreducible) throw Error(ErrorCode::IrreducibilityUnknown, irr.describe());
      v.irreducibility = Irreducibility::Assumed;
      v.warnings.push_back("irreducibility assumed, not certified: " + irr.describe());
      break;
    case IrreducibilityStatus::Certified:
      v.irreducibility = Irreducibility::Certified;
      break;
  }

  const RootCount roots = count_real_roots(g);
  v.real_roots = roots.real;
  v.r = roots.nonreal_r;
  v.s = roots.s;
  if (v.r == 0) {
    if (!cfg.force_sieve) {
      throw Error(ErrorCode::NoNonrealRoots, "all roots are real; no transposition-type witness is available");
    }
    v.warnings.push_back("UNSOUND-FOR-r=0: sieve run without a conjugation constraint");
  }

  const std::string big = v.discriminant.is_square ? alternating_name(p) : symmetric_name(p);
  if (v.r > 0) {
    std::optional<GateResult> fired;
    std::string detail;
    try {
      GateResult cor = corollary_gate(v.r, p);
      detail = "corollary: " + cor.threshold_detail;
      if (cor.applies) fired = cor;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedR) throw;
      detail = "corollary: not tabulated for r = " + std::to_string(v.r);
    }
    if (!fired) {
      GateResult jor = jordan_gate(v.s, p);
      detail += "; jordan: " + jor.threshold_detail;
      if (jor.applies) fired = jor;
    }
    v.gate_detail = detail;
    if (fired) {
      v.method = fired->reason == GateReason::Corollary ? Method::Corollary : Method::Jordan;
      v.group = big;
      v.remaining_candidates = {{big, std::nullopt}};
      if (cfg.cross_check_sieve && db.covers(p)) {
        const SieveRun run = run_sieve(g, v.discriminant, p, v.s, cfg, db);
        const auto left = run.state.survivors();
        std::string joined;
        for (const auto& name : left) joined += (joined.empty() ? "" : ", ") + name;
        v.sieve_cross_check = (left.size() == 1 ? "unique: " : "ambiguous: ") + joined;
        if (std::find(left.begin(), left.end(), big) == left.end()) {
          throw Error(ErrorCode::EmptyCandidates, "sieve eliminated " + big + " although a gate fired");
        }
      }
      return v;
    }
  }

  if (!db.covers(p)) {
    v.method = Method::OutOfCoverage;
    v.remaining_candidates = classification_candidates(p, v.s, v.discriminant.is_square);
    return v;
  }

  SieveRun run = run_sieve(g, v.discriminant, p, v.s, cfg, db);
  v.remaining_candidates = survivors_of(run.state);
  v.evidence = std::move(run.evidence);
  v.type_frequencies = std::move(run.frequencies);
  v.primes_used = static_cast<int>(v.evidence.size());
  if (run.state.is_unique()) {
    v.method = Method::SieveUnique;
    v.group = v.remaining_candidates.front().name;
  } else {
    v.method = Method::SieveAmbiguous;
    v.warnings.push_back("prime budget exhausted with " + std::to_string(v.remaining_candidates.size()) +
                         " candidates left; type frequencies are soft evidence only");
  }
  return v;
}

std::vector<std::string> verdict_violations(const Verdict& v) {
  std::vector<std::string> out;
  if (v.real_roots + v.r != v.p) out.push_back("real_roots + r != p");
  if (v.r % 2 != 0 || v.s * 2 != v.r) out.push_back("r must be even with s = r/2");
  if (v.discriminant.value == 0) out.push_back("zero discriminant");
  if (v.discriminant.is_square != v.discriminant.square_root.has_value()) out.push_back("square flag without root");
  if (v.discriminant.square_root && (*v.discriminant.square_root) * (*v.discriminant.square_root) != v.discriminant.value) {
    out.push_back("square root does not square to the discriminant");
  }
  const std::string big = v.discriminant.is_square ? alternating_name(v.p) : symmetric_name(v.p);
  switch (v.method) {
    case Method::Jordan:
    case Method::Corollary:
      if (v.group != big) out.push_back("gated verdict must be " + big);
      if (v.r == 0) out.push_back("gate fired with r = 0");
      break;
    case Method::SieveUnique:
      if (v.remaining_candidates.size() != 1) out.push_back("unique verdict with several candidates");
      else if (v.group != v.remaining_candidates.front().name) out.push_back("group differs from the survivor");
      break;
    case Method::SieveAmbiguous:
      if (v.group) out.push_back("ambiguous verdict names a group");
      if (v.remaining_candidates.size() < 2) out.push_back("ambiguous verdict with fewer than two candidates");
      break;
    case Method::OutOfCoverage:
      if (v.group) out.push_back("out-of-coverage verdict names a group");
      break;
  }
  if (v.primes_used != static_cast<int>(v.evidence.size())) out.push_back("primes_used != evidence length");
  for (std::size_t i = 1; i < v.evidence.size(); ++i) {
    if (v.evidence[i - 1].prime >= v.evidence[i].prime) out.push_back("evidence primes not increasing");
  }
  int counted = 0;
  for (const auto& [type, n] : v.type_frequencies) counted += n;
  if (counted != v.primes_used) out.push_back("type frequencies do not add up to primes_used");
  for (const auto& e : v.evidence) {
    if (e.observed.degree() != v.p) out.push_back("observed type of wrong degree");
    if (v.discriminant.is_square && !e.observed.is_even()) out.push_back("odd type with square discriminant");
  }
  return out;
}

RationalPoly family_jordan(int n, const Rational& t) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "family_jordan needs n >= 2");
  if (t == 0 || t == 1) throw Error(ErrorCode::DegenerateT, "t = " + t.get_str() + " gives a repeated root");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  c[static_cast<std::size_t>(n)] = n - 1;
  c[static_cast<std::size_t>(n - 1)] = -n;
  c[0] = t;
  return RationalPoly(std::move(c));
}

IntPoly family_a23(const Integer& m) {
  if (m == 0) throw Error(ErrorCode::ZeroM, "m = 0 gives a repeated root");
  const Integer m2 = m * m;
  std::vector<Integer> c(24, Integer(0));
  c[23] = 22 * m2 + 506;
  c[22] = -(23 * m2 + 529);
  c[0] = 23;
  return IntPoly(std::move(c));
}

}  // namespace galois
