#include <sstream>

#include <json.hpp>

#include "galois/engine.hpp"

namespace galois {

namespace {

using ojson = nlohmann::ordered_json;

ojson optional_text(const std::optional<std::string>& s) { return s ? ojson(*s) : ojson(nullptr); }

}  // namespace

std::string to_json(const Verdict& v) {
  ojson out;
  out["input"] = v.input;
  out["monic_integer"] = v.monic_integer;
  out["scale"] = v.scale.get_str();
  out["p"] = std::to_string(v.p);
  out["real_roots"] = std::to_string(v.real_roots);
  out["r"] = std::to_string(v.r);
  out["s"] = std::to_string(v.s);
  out["discriminant"] = {
      {"value", v.discriminant.value.get_str()},
      {"is_square", v.discriminant.is_square},
      {"square_root", v.discriminant.square_root ? ojson(v.discriminant.square_root->get_str()) : ojson(nullptr)},
  };
  out["method"] = std::string(to_string(v.method));
  out["group"] = optional_text(v.group);
  ojson candidates = ojson::array();
  for (const auto& c : v.remaining_candidates) candidates.push_back({{"name", c.name}, {"caveat", optional_text(c.caveat)}});
  out["remaining_candidates"] = std::move(candidates);
  ojson evidence = ojson::array();
  for (const auto& e : v.evidence) {
    evidence.push_back({{"prime", std::to_string(e.prime)}, {"cycle_type", e.observed.to_string()}, {"eliminated", e.eliminated}});
  }
  out["evidence"] = std::move(evidence);
  ojson freq = ojson::array();
  for (const auto& [type, n] : v.type_frequencies) freq.push_back({{"cycle_type", type.to_string()}, {"count", std::to_string(n)}});
  out["type_frequencies"] = std::move(freq);
  out["primes_used"] = std::to_string(v.primes_used);
  out["irreducibility"] = std::string(to_string(v.irreducibility));
  out["irreducibility_detail"] = v.irreducibility_detail;
  out["gate_detail"] = v.gate_detail;
  out["warnings"] = v.warnings;
  out["sieve_cross_check"] = optional_text(v.sieve_cross_check);
  return out.dump(2) + "\n";
}

std::string to_text(const Verdict& v) {
  std::ostringstream os;
  os << "polynomial:      " << v.input << "\n";
  if (v.scale != 1 || v.monic_integer != v.input) {
    os << "monic integer:   " << v.monic_integer << "  (roots scaled by " << v.scale.get_str() << ")\n";
  }
  os << "degree:          " << v.p << "\n";
  os << "real roots:      " << v.real_roots << "\n";
  os << "non-real roots:  " << v.r << "  (s = " << v.s << ")\n";
  os << "discriminant:    " << v.discriminant.value.get_str();
  if (v.discriminant.is_square) {
    os << "  (square of " << v.discriminant.square_root->get_str() << ")";
  } else {
    os << "  (not a square)";
  }
  os << "\n";
  os << "irreducibility:  " << to_string(v.irreducibility) << ", " << v.irreducibility_detail << "\n";
  if (!v.gate_detail.empty()) os << "gates:           " << v.gate_detail << "\n";
  os << "method:          " << to_string(v.method) << "\n";
  os << "galois group:    " << (v.group ? *v.group : std::string("undetermined")) << "\n";
  if (!v.group || v.method == Method::SieveUnique) {
    os << "candidates:\n";
    for (const auto& c : v.remaining_candidates) {
      os << "  " << c.name;
      if (c.caveat) os << "  [" << *c.caveat << "]";
      os << "\n";
    }
  }
  if (!v.evidence.empty()) {
    os << "evidence (" << v.primes_used << " primes):\n";
    for (const auto& e : v.evidence) {
      if (e.eliminated.empty() && v.method == Method::SieveAmbiguous) continue;
      os << "  q = " << e.prime << "  " << e.observed.to_string();
      if (!e.eliminated.empty()) {
        os << "  eliminates";
        for (const auto& name : e.eliminated) os << " " << name;
      }
      os << "\n";
    }
  }
  if (!v.type_frequencies.empty() && v.method == Method::SieveAmbiguous) {
    os << "type frequencies:\n";
    for (const auto& [type, n] : v.type_frequencies) os << "  " << type.to_string() << "  " << n << "\n";
  }
  if (v.sieve_cross_check) os << "sieve cross-check: " << *v.sieve_cross_check << "\n";
  for (const auto& w : v.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace galois
