#include "galois/cycle_type.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "galois/error.hpp"

namespace galois {

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw Error(ErrorCode::PreconditionViolated, "cycle lengths must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

CycleType CycleType::conjugation(int degree, int s) {
  if (s < 0 || 2 * s > degree) throw Error(ErrorCode::PreconditionViolated, "conjugation type needs 0 <= 2s <= degree");
  std::vector<int> parts(static_cast<std::size_t>(s), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(degree - 2 * s), 1);
  return CycleType(std::move(parts));
}

CycleType CycleType::identity(int degree) { return CycleType(std::vector<int>(static_cast<std::size_t>(degree), 1)); }

int CycleType::degree() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool CycleType::is_identity() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

bool CycleType::is_even() const noexcept {
  int transpositions = 0;
  for (int p : parts_) transpositions += p - 1;
  return transpositions % 2 == 0;
}

std::string CycleType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    out += "(" + std::to_string(parts_[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace galois
