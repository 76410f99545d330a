#include "galois/groups.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "galois/error.hpp"
#include "galois/modp.hpp"

namespace galois {

extern const std::string_view kEmbeddedSignatureJson;

namespace {

using json = nlohmann::json;

[[noreturn]] void db_error(const std::string& what) { throw Error(ErrorCode::DatabaseError, what); }

Provenance parse_provenance(const std::string& s) {
  if (s == "PUBLISHED") return Provenance::Published;
  if (s == "COMPUTED") return Provenance::Computed;
  db_error("unknown provenance '" + s + "'");
}

Confidence parse_confidence(const std::string& s) {
  if (s == "HIGH") return Confidence::High;
  if (s == "LOW") return Confidence::Low;
  db_error("unknown confidence '" + s + "'");
}

GroupSignature parse_row(const json& row, const std::set<int>& coverage) {
  GroupSignature sig;
  try {
    sig.prime_degree = row.at("p").get<int>();
    sig.name = row.at("name").get<std::string>();
    sig.solvable = row.at("solvable").get<bool>();
    sig.provenance = parse_provenance(row.at("provenance").get<std::string>());
    sig.confidence = parse_confidence(row.value("confidence", std::string("HIGH")));
    sig.source_text = row.value("source_text", std::string());
    sig.note = row.value("note", std::string());
    if (row.contains("caveat")) sig.caveat = row.at("caveat").get<std::string>();
    const auto label = sig.name + " (p = " + std::to_string(sig.prime_degree) + ")";
    if (sig.name.empty()) db_error("row with empty name");
    if (!coverage.contains(sig.prime_degree)) db_error(label + ": degree not in coverage list");
    for (const auto& parts : row.at("types")) {
      CycleType t(parts.get<std::vector<int>>());
      if (t.degree() != sig.prime_degree) {
        db_error(label + ": type " + t.to_string() + " sums to " + std::to_string(t.degree()));
      }
      if (t.is_identity()) db_error(label + ": identity type stored");
      sig.types.push_back(std::move(t));
    }
    if (sig.types.empty()) db_error(label + ": no types");
  } catch (const json::exception& e) {
    db_error(std::string("malformed row: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DatabaseError) throw;
    db_error(std::string("invalid row: ") + e.what());
  }
  std::sort(sig.types.begin(), sig.types.end());
  if (std::adjacent_find(sig.types.begin(), sig.types.end()) != sig.types.end()) {
    db_error(sig.name + ": repeated type");
  }
  return sig;
}

double round_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
double round_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

std::string_view to_string(Provenance p) {
  return p == Provenance::Published ? "PUBLISHED" : "COMPUTED";
}

std::string_view to_string(Confidence c) { return c == Confidence::High ? "HIGH" : "LOW"; }

std::string_view to_string(GateReason r) {
  switch (r) {
    case GateReason::JordanBound: return "JORDAN_BOUND";
    case GateReason::Corollary: return "COROLLARY";
    case GateReason::None: return "NONE";
  }
  return "NONE";
}

bool GroupSignature::all_even() const {
  return std::all_of(types.begin(), types.end(), [](const CycleType& t) { return t.is_even(); });
}

bool GroupSignature::contains(const CycleType& t) const {
  return std::binary_search(types.begin(), types.end(), t);
}

SignatureDB SignatureDB::parse(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    db_error(std::string("not valid JSON: ") + e.what());
  }
  SignatureDB db;
  std::set<int> coverage;
  try {
    for (int p : doc.at("coverage")) {
      if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) db_error("coverage entry " + std::to_string(p) + " is not prime");
      coverage.insert(p);
    }
    for (const auto& row : doc.at("rows")) db.rows_.push_back(parse_row(row, coverage));
  } catch (const json::exception& e) {
    db_error(std::string("malformed document: ") + e.what());
  }
  db.coverage_.assign(coverage.begin(), coverage.end());

  for (int p : db.coverage_) {
    const auto at_p = db.rows_at(p);
    for (std::size_t i = 0; i < at_p.size(); ++i) {
      for (std::size_t j = i + 1; j < at_p.size(); ++j) {
        if (at_p[i]->name == at_p[j]->name) db_error("duplicate name " + at_p[i]->name + " at p = " + std::to_string(p));
        if (at_p[i]->types == at_p[j]->types) {
          db_error(at_p[i]->name + " and " + at_p[j]->name + " have identical cycle structure at p = " + std::to_string(p));
        }
      }
    }
  }
  return db;
}

SignatureDB SignatureDB::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) db_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const SignatureDB& SignatureDB::embedded() {
  static const SignatureDB db = parse(kEmbeddedSignatureJson);
  return db;
}

bool SignatureDB::covers(int p) const { return std::binary_search(coverage_.begin(), coverage_.end(), p); }

std::vector<const GroupSignature*> SignatureDB::rows_at(int p) const {
  std::vector<const GroupSignature*> out;
  for (const auto& row : rows_) {
    if (row.prime_degree == p) out.push_back(&row);
  }
  return out;
}

std::vector<const GroupSignature*> SignatureDB::low_confidence_rows() const {
  std::vector<const GroupSignature*> out;
  for (const auto& row : rows_) {
    if (row.confidence == Confidence::Low) out.push_back(&row);
  }
  return out;
}

std::string SignatureDB::validation_report() const {
  std::ostringstream os;
  os << "signature database: " << rows_.size() << " rows\n";
  for (int p : coverage_) {
    const auto at_p = rows_at(p);
    std::size_t types = 0;
    for (const auto* row : at_p) types += row->types.size();
    os << "  p = " << p << ": " << at_p.size() << " rows, " << types << " types, all summing to " << p
       << ", pairwise distinct\n";
  }
  const auto low = low_confidence_rows();
  os << "LOW_CONFIDENCE rows: " << low.size() << "\n";
  for (const auto* row : low) {
    os << "  p = " << row->prime_degree << " " << row->name << ": " << row->note << "\n";
    if (!row->source_text.empty()) os << "    as listed: " << row->source_text << "\n";
  }
  return os.str();
}

GateResult jordan_gate(int s, int p) {
  if (p < 5 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::PreconditionViolated, "jordan_gate needs a prime p >= 5");
  }
  if (s < 1 || 2 * s > p) throw Error(ErrorCode::PreconditionViolated, "jordan_gate needs 1 <= s and 2s <= p");

  // Enclose s(s ln s + 2 ln s + 3) with one outward step after every
  // rounded operation; std::log is within one ulp, so two steps cover it.
  const double ds = s;
  const double ln = std::log(ds);
  const double ln_hi = s == 1 ? 0.0 : round_up(round_up(ln));
  const double ln_lo = s == 1 ? 0.0 : round_down(round_down(ln));
  const double hi = round_up(ds * round_up(round_up(round_up(ds * ln_hi) + 2.0 * ln_hi) + 3.0));
  const double lo = round_down(ds * round_down(round_down(round_down(ds * ln_lo) + 2.0 * ln_lo) + 3.0));

  GateResult result;
  result.applies = hi <= static_cast<double>(p);
  result.reason = result.applies ? GateReason::JordanBound : GateReason::None;
  result.threshold_detail = "s(s ln s + 2 ln s + 3) in [" + format_double(lo) + ", " + format_double(hi) + "]" +
                            (result.applies ? " <= " : " not <= ") + "p = " + std::to_string(p);
  return result;
}

GateResult corollary_gate(int r, int p) {
  static const std::map<int, int> kThreshold{{4, 7}, {6, 13}, {8, 23}, {10, 37}};
  const auto it = kThreshold.find(r);
  if (it == kThreshold.end()) {
    throw Error(ErrorCode::UnsupportedR, "r = " + std::to_string(r) + " is not one of 4, 6, 8, 10");
  }
  GateResult result;
  result.applies = p > it->second;
  result.reason = result.applies ? GateReason::Corollary : GateReason::None;
  result.threshold_detail = "r = " + std::to_string(r) + " needs p > " + std::to_string(it->second) +
                            "; p = " + std::to_string(p);
  return result;
}

bool Candidate::admits(const CycleType& t) const {
  if (t.is_identity()) return true;
  switch (kind) {
    case CandidateKind::Symmetric: return true;
    case CandidateKind::Alternating: return t.is_even();
    case CandidateKind::Explicit: return std::binary_search(types.begin(), types.end(), t);
  }
  return false;
}

SieveState::SieveState(int degree, std::vector<Candidate> candidates)
    : degree_(degree), candidates_(std::move(candidates)) {}

std::vector<std::string> SieveState::survivors() const {
  std::vector<std::string> out;
  for (const auto& c : candidates_) {
    if (c.alive()) out.push_back(c.name);
  }
  return out;
}

std::size_t SieveState::alive_count() const {
  return static_cast<std::size_t>(std::count_if(candidates_.begin(), candidates_.end(), [](const Candidate& c) { return c.alive(); }));
}

SieveState candidates_for(const SignatureDB& db, int p, int s, bool disc_is_square) {
  if (!db.covers(p)) {
    throw Error(ErrorCode::OutOfCoverage, "degree " + std::to_string(p) + " is outside the signature database");
  }
  if (s < 0 || 2 * s > p) throw Error(ErrorCode::PreconditionViolated, "need 0 <= 2s <= p");

  std::vector<Candidate> out;
  const CycleType conj = CycleType::conjugation(p, s);
  // A_p / S_p contain every even / every type respectively.
  if (disc_is_square) {
    if (conj.is_even()) out.push_back({alternating_name(p), CandidateKind::Alternating, {}, std::nullopt, std::nullopt});
  } else {
    out.push_back({symmetric_name(p), CandidateKind::Symmetric, {}, std::nullopt, std::nullopt});
  }
  for (const auto* row : db.rows_at(p)) {
    if (row->all_even() != disc_is_square) continue;
    if (s > 0 && !row->contains(conj)) continue;
    out.push_back({row->name, CandidateKind::Explicit, row->types, row->caveat, std::nullopt});
  }
  if (out.empty()) {
    throw Error(ErrorCode::NoConjugationWitness,
                "no candidate at p = " + std::to_string(p) + " contains " + conj.to_string() + " with " +
                    (disc_is_square ? "square" : "non-square") + " discriminant");
  }
  return SieveState(p, std::move(out));
}

SieveState candidates_for(int p, int s, bool disc_is_square) {
  return candidates_for(SignatureDB::embedded(), p, s, disc_is_square);
}

SieveState eliminate(const SieveState& state, const CycleType& observed, std::uint64_t prime) {
  if (observed.degree() != state.degree()) {
    throw Error(ErrorCode::PreconditionViolated, "observed type " + observed.to_string() + " does not have degree " +
                                                     std::to_string(state.degree()));
  }
  std::vector<Candidate> next(state.candidates().begin(), state.candidates().end());
  for (auto& c : next) {
    if (c.alive() && !c.admits(observed)) c.eliminated_by = Elimination{prime, observed};
  }
  SieveState out(state.degree(), std::move(next));
  if (out.alive_count() == 0) {
    throw Error(ErrorCode::EmptyCandidates, "type " + observed.to_string() + " at q = " + std::to_string(prime) +
                                                " eliminated every candidate");
  }
  return out;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      return n == 1;
    }
  }
  return true;
}

std::vector<std::pair<int, std::uint64_t>> projective_parameters(std::uint64_t p, std::uint64_t q_bound) {
  std::vector<std::pair<int, std::uint64_t>> out;
  for (std::uint64_t q = 2; q <= q_bound && q + 1 <= p; ++q) {
    if (!is_prime_power(q)) continue;
    // 1 + q + ... + q^(k-1)
    std::uint64_t sum = 1 + q;
    std::uint64_t term = q;
    for (int k = 2; sum <= p; ++k) {
      if (sum == p) {
        out.emplace_back(k, q);
        break;
      }
      if (term > p / q) break;
      term *= q;
      sum += term;
    }
  }
  return out;
}

}  // namespace galois
