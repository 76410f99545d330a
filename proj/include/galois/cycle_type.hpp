#pragma once

#include <compare>
#include <string>
#include <vector>

namespace galois {

/// Multiset of cycle lengths of a permutation, fixed points included as
/// parts of length 1. Stored in descending order.
class CycleType {
 public:
  CycleType() = default;
  /// Throws PreconditionViolated on a nonpositive part.
  explicit CycleType(std::vector<int> parts);

  /// (2)^s (1)^(degree - 2s), the shape of complex conjugation with s
  /// pairs of non-real roots.
  static CycleType conjugation(int degree, int s);
  static CycleType identity(int degree);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int degree() const noexcept;
  bool is_identity() const noexcept;
  /// Even permutation iff sum(part - 1) is even.
  bool is_even() const noexcept;

  /// Compact notation, e.g. "(5)^2(1)" or "(6)(3)(2)".
  std::string to_string() const;

  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> parts_;
};

}  // namespace galois
