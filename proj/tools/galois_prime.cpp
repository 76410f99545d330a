// galois-prime: Galois groups of prime-degree polynomials over Q.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "galois/engine.hpp"
#include "galois/error.hpp"
#include "galois/groups.hpp"
#include "galois/parse.hpp"
#include "galois/realroots.hpp"
#include "galois/resultant.hpp"

using galois::Integer;

namespace {

constexpr int kExitVerdict = 0;
constexpr int kExitRejected = 2;
constexpr int kExitInternal = 3;

Integer parse_integer(const std::string& text, const char* what) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw galois::Error(galois::ErrorCode::SyntaxError, std::string(what) + " must be an integer, got '" + text + "'");
  }
  return out;
}

galois::Rational parse_rational(const std::string& text, const char* what) {
  const galois::RationalPoly p = [&] {
    try {
      return galois::parse_poly(text);
    } catch (const galois::Error& e) {
      if (e.code() == galois::ErrorCode::ZeroPolynomial) return galois::RationalPoly{};
      throw;
    }
  }();
  if (p.degree() > 0) throw galois::Error(galois::ErrorCode::SyntaxError, std::string(what) + " must be a rational number");
  return p[0];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"galois-prime: Galois group of an irreducible polynomial of prime degree p >= 5 over Q"};
  app.require_subcommand(1);
  app.footer(std::string("Polynomial grammar:\n") + std::string(galois::kPolyGrammar) +
             "\n\nExit codes: 0 verdict reached (including SIEVE_AMBIGUOUS), 2 input rejected, 3 internal invariant "
             "violation.");

  std::string poly_text;
  bool json = false;
  bool cross_check = false;
  std::optional<std::string> db_path;
  galois::EngineConfig cfg;

  auto* analyze = app.add_subcommand("analyze", "Determine the Galois group");
  analyze->add_option("poly", poly_text, "Polynomial in x")->required();
  analyze->add_flag("--json", json, "Emit the verdict as JSON");
  analyze->add_option("--prime-budget", cfg.prime_budget, "Good primes examined by the sieve")->check(CLI::PositiveNumber);
  analyze->add_option("--start-prime", cfg.start_prime, "First prime tried by the sieve");
  analyze->add_flag("--force-sieve", cfg.force_sieve, "Run the sieve even when all roots are real (unsound)");
  analyze->add_flag("--assume-irreducible", cfg.assume_irreducible, "Proceed without an irreducibility certificate");
  analyze->add_flag("--cross-check", cross_check, "Also run the sieve when a gate decides");
  analyze->add_option("--db", db_path, "Signature database JSON file (default: built in)");

  auto* family = app.add_subcommand("family", "Print a member of a polynomial family in the polynomial grammar");
  family->require_subcommand(1);
  int n = 0;
  std::string t_text;
  std::string m_text;
  auto* jordan = family->add_subcommand("jordan", "(n-1) x^n - n x^(n-1) + t");
  jordan->add_option("--n", n, "Degree")->required();
  jordan->add_option("--t", t_text, "Constant term (rational, not 0 or 1)")->required();
  auto* a23 = family->add_subcommand("a23", "(22m^2+506) x^23 - (23m^2+529) x^22 + 23");
  a23->add_option("--m", m_text, "Nonzero integer parameter")->required();

  auto* roots = app.add_subcommand("roots", "Count real and non-real roots");
  roots->add_option("poly", poly_text, "Polynomial in x")->required();
  auto* disc = app.add_subcommand("disc", "Exact discriminant and whether it is a square");
  disc->add_option("poly", poly_text, "Polynomial in x")->required();

  auto* db_cmd = app.add_subcommand("db", "Validate the signature database and print the report");
  db_cmd->add_option("--db", db_path, "Signature database JSON file (default: built in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitVerdict : kExitRejected;
  }

  try {
    std::optional<galois::SignatureDB> loaded;
    if (db_path) loaded = galois::SignatureDB::load_file(*db_path);

    if (*analyze) {
      cfg.db = loaded ? &*loaded : nullptr;
      cfg.cross_check_sieve = cross_check;
      cfg.emit = json ? galois::OutputFormat::Json : galois::OutputFormat::Text;
      const galois::Verdict v = galois::analyze(galois::parse_poly(poly_text), cfg);
      if (const auto bad = galois::verdict_violations(v); !bad.empty()) {
        for (const auto& b : bad) std::cerr << "invariant violated: " << b << "\n";
        return kExitInternal;
      }
      std::cout << (cfg.emit == galois::OutputFormat::Json ? galois::to_json(v) : galois::to_text(v));
    } else if (*jordan) {
      std::cout << galois::to_text(galois::family_jordan(n, parse_rational(t_text, "--t"))) << "\n";
    } else if (*a23) {
      std::cout << galois::to_text(galois::family_a23(parse_integer(m_text, "--m"))) << "\n";
    } else if (*roots) {
      const auto count = galois::count_real_roots(galois::parse_poly(poly_text));
      std::cout << "real roots: " << count.real << "\nnon-real roots: " << count.nonreal_r << " (s = " << count.s
                << ")\n";
    } else if (*disc) {
      const auto d = galois::discriminant(galois::parse_poly(poly_text));
      std::cout << "discriminant: " << d.value.get_str() << "\n";
      if (d.is_square) {
        std::cout << "square: yes (" << d.square_root->get_str() << "^2)\n";
      } else {
        std::cout << "square: no\n";
      }
    } else if (*db_cmd) {
      const auto& db = loaded ? *loaded : galois::SignatureDB::embedded();
      std::cout << db.validation_report();
    }
    return kExitVerdict;
  } catch (const galois::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRejected;
  } catch (const galois::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return galois::is_input_rejection(e.code()) ? kExitRejected : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
