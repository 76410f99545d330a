#include "galois/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>

namespace galois {

namespace {

// Hard ceiling on exponents; far beyond anything this library handles.
constexpr unsigned long kMaxExponent = 100000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalPoly parse() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "a term");
    parse_term(false);
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = text_[pos_];
      if (c != '+' && c != '-') throw SyntaxError(pos_, "'+', '-' or end of input");
      ++pos_;
      parse_term(c == '-');
    }

    std::vector<Rational> coeffs;
    if (!terms_.empty()) coeffs.resize(terms_.rbegin()->first + 1);
    for (auto& [exp, c] : terms_) coeffs[exp] = c;
    RationalPoly out(std::move(coeffs));
    if (out.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "all terms cancel");
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_digit() {
    skip_space();
    return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool peek_identifier() {
    skip_space();
    return !at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  std::string read_digits() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_term(bool negated) {
    skip_space();
    if (!at_end() && text_[pos_] == '-') {
      negated = !negated;
      ++pos_;
    }

    std::optional<Rational> coeff;
    unsigned long exponent = 0;

    if (peek_digit()) {
      coeff = parse_coeff();
      skip_space();
      bool star = false;
      if (!at_end() && text_[pos_] == '*') {
        star = true;
        ++pos_;
      }
      if (peek_identifier()) {
        exponent = parse_var();
      } else if (star) {
        throw SyntaxError(pos_, "variable 'x'");
      }
    } else if (peek_identifier()) {
      exponent = parse_var();
    } else {
      throw SyntaxError(pos_, "integer or variable 'x'");
    }

    Rational value = coeff.value_or(Rational(1));
    if (negated) value = -value;
    terms_[exponent] += value;
  }

  Rational parse_coeff() {
    Integer num(read_digits());
    skip_space();
    if (!at_end() && text_[pos_] == '.') throw SyntaxError(pos_, "integer or fraction (no decimal literals)");
    if (at_end() || text_[pos_] != '/') return Rational(num);
    ++pos_;
    if (!peek_digit()) throw SyntaxError(pos_, "positive integer denominator");
    const std::size_t den_pos = pos_;
    Integer den(read_digits());
    if (den == 0) throw SyntaxError(den_pos, "positive integer denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  unsigned long parse_var() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view ident = text_.substr(start, pos_ - start);
    if (ident != "x") {
      throw Error(ErrorCode::UnknownVariable,
                  "'" + std::string(ident) + "' at position " + std::to_string(start) + " (only x is allowed)");
    }
    skip_space();
    if (at_end() || text_[pos_] != '^') return 1;
    ++pos_;
    if (!peek_digit()) throw SyntaxError(pos_, "nonnegative integer exponent");
    const std::size_t exp_pos = pos_;
    const std::string digits = read_digits();
    if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) throw SyntaxError(exp_pos, "exponent <= 100000");
    return std::stoul(digits);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<unsigned long, Rational> terms_;
};

}  // namespace

RationalPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace galois
