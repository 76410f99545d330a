#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galois/cycle_type.hpp"

namespace galois {

enum class Provenance { Published, Computed };
enum class Confidence { High, Low };

std::string_view to_string(Provenance p);
std::string_view to_string(Confidence c);

/// One transitive group of prime degree, identified by the cycle types of
/// its non-identity elements.
struct GroupSignature {
  int prime_degree = 0;
  std::string name;
  bool solvable = false;
  std::vector<CycleType> types;  // sorted, no identity
  Provenance provenance = Provenance::Published;
  Confidence confidence = Confidence::High;
  std::string source_text;  // original abbreviated listing, empty for computed rows
  std::string note;
  std::optional<std::string> caveat;

  bool all_even() const;
  bool contains(const CycleType& t) const;
};

/// Immutable, validated collection of signatures for the covered primes.
///
/// Validation (any failure throws DatabaseError): every type sums to its
/// row's degree and is not the identity, no type repeats inside a row,
/// names are unique per degree, and no two rows of the same degree share a
/// type set.
class SignatureDB {
 public:
  static SignatureDB parse(std::string_view json_text);
  static SignatureDB load_file(const std::filesystem::path& path);
  /// The database compiled into the library.
  static const SignatureDB& embedded();

  bool covers(int p) const;
  const std::vector<int>& coverage() const noexcept { return coverage_; }
  std::span<const GroupSignature> rows() const noexcept { return rows_; }
  std::vector<const GroupSignature*> rows_at(int p) const;
  std::vector<const GroupSignature*> low_confidence_rows() const;

  /// Human-readable summary: per-degree row counts, the checks performed
  /// and every LOW confidence row with its note.
  std::string validation_report() const;

 private:
  std::vector<GroupSignature> rows_;
  std::vector<int> coverage_;
};

enum class GateReason { JordanBound, Corollary, None };
std::string_view to_string(GateReason r);

struct GateResult {
  bool applies = false;
  GateReason reason = GateReason::None;
  std::string threshold_detail;
};

/// Fires iff s(s ln s + 2 ln s + 3) <= p, decided on a rigorous upper
/// bound of the left side so a borderline case never fires.
GateResult jordan_gate(int s, int p);

/// r = 4, 6, 8, 10 with p > 7, 13, 23, 37 respectively. Throws
/// UnsupportedR for any other r.
GateResult corollary_gate(int r, int p);

enum class CandidateKind { Explicit, Alternating, Symmetric };

struct Elimination {
  std::uint64_t prime = 0;
  CycleType observed;
};

struct Candidate {
  std::string name;
  CandidateKind kind = CandidateKind::Explicit;
  std::vector<CycleType> types;  // Explicit only
  std::optional<std::string> caveat;
  std::optional<Elimination> eliminated_by;

  bool alive() const noexcept { return !eliminated_by.has_value(); }
  /// Whether a group with this signature can contain an element of type t.
  bool admits(const CycleType& t) const;
};

/// Candidate groups during mod-q elimination. Eliminated candidates stay
/// in the list with their witness; transitions return a new state.
class SieveState {
 public:
  SieveState(int degree, std::vector<Candidate> candidates);

  int degree() const noexcept { return degree_; }
  std::span<const Candidate> candidates() const noexcept { return candidates_; }
  std::vector<std::string> survivors() const;
  std::size_t alive_count() const;
  bool is_unique() const { return alive_count() == 1; }

 private:
  int degree_;
  std::vector<Candidate> candidates_;
};

inline std::string alternating_name(int p) { return "A" + std::to_string(p); }
inline std::string symmetric_name(int p) { return "S" + std::to_string(p); }

/// Rows of degree p containing the conjugation type (2)^s(1)^(p-2s), split
/// by parity: all-even rows plus A_p when the discriminant is a square,
/// otherwise rows with an odd element plus S_p. s = 0 applies no
/// conjugation filter.
///
/// Throws OutOfCoverage for p outside the database and NoConjugationWitness
/// when nothing is left.
SieveState candidates_for(const SignatureDB& db, int p, int s, bool disc_is_square);
SieveState candidates_for(int p, int s, bool disc_is_square);

/// Removes every live candidate that cannot contain `observed`, recording
/// (prime, observed) as witness. Throws EmptyCandidates if nothing survives.
SieveState eliminate(const SieveState& state, const CycleType& observed, std::uint64_t prime);

bool is_prime_power(std::uint64_t n);

/// Pairs (k, q), k >= 2 and q <= q_bound a prime power, with
/// (q^k - 1)/(q - 1) = p; ordered by q, then k.
std::vector<std::pair<int, std::uint64_t>> projective_parameters(std::uint64_t p, std::uint64_t q_bound);

}  // namespace galois
