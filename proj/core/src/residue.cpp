#include "wheel6/residue.hpp"

#include <string>

#include "wheel6/errors.hpp"

namespace wheel6 {

namespace {

// n = 6k + offset(cls)
constexpr int offset(ResidueClass cls) {
  switch (cls) {
    case ResidueClass::Two: return -4;
    case ResidueClass::Three: return -3;
    case ResidueClass::Four: return -2;
    case ResidueClass::A: return -1;
    case ResidueClass::Six: return 0;
    case ResidueClass::B: return 1;
    case ResidueClass::Unit: break;
  }
  return 0;
}

}  // namespace

ClassifiedNumber classify(std::uint64_t n) {
  if (n == 0) throw RangeError("classify: 0 is not in the domain (n >= 1)");
  if (n > kMaxValue) {
    throw RangeError("classify: " + std::to_string(n) + " exceeds 2^62");
  }
  if (n == 1) return {1, ResidueClass::Unit, std::nullopt};

  switch (n % 6) {
    case 0: return {n, ResidueClass::Six, n / 6};
    case 1: return {n, ResidueClass::B, (n - 1) / 6};
    case 2: return {n, ResidueClass::Two, (n + 4) / 6};
    case 3: return {n, ResidueClass::Three, (n + 3) / 6};
    case 4: return {n, ResidueClass::Four, (n + 2) / 6};
    default: return {n, ResidueClass::A, (n + 1) / 6};
  }
}

std::uint64_t value_of(ResidueClass cls, std::uint64_t k) {
  if (cls == ResidueClass::Unit) {
    throw RangeError("value_of: UNIT has no class formula");
  }
  if (k == 0) throw RangeError("value_of: wheel index must be >= 1");
  // 6k + offset <= 2^62  <=>  k <= (2^62 - offset) / 6
  const auto ceiling = (kMaxValue - static_cast<std::uint64_t>(offset(cls))) / 6;
  if (k > ceiling) {
    throw RangeError("value_of: k = " + std::to_string(k) + " overflows 2^62");
  }
  return 6 * k + static_cast<std::uint64_t>(offset(cls));
}

TrivialStatus trivial_status(ResidueClass cls, std::uint64_t k) {
  if (cls == ResidueClass::Unit) return TrivialStatus::Unit;
  if (k == 0) throw RangeError("trivial_status: wheel index must be >= 1");
  switch (cls) {
    case ResidueClass::Two:
    case ResidueClass::Three:
      return k == 1 ? TrivialStatus::PrimeException : TrivialStatus::AlwaysComposite;
    case ResidueClass::Four:
    case ResidueClass::Six:
      return TrivialStatus::AlwaysComposite;
    default:
      return TrivialStatus::Candidate;
  }
}

std::string_view to_string(ResidueClass cls) noexcept {
  switch (cls) {
    case ResidueClass::Unit: return "UNIT";
    case ResidueClass::Two: return "TWO";
    case ResidueClass::Three: return "THREE";
    case ResidueClass::Four: return "FOUR";
    case ResidueClass::A: return "A";
    case ResidueClass::Six: return "SIX";
    case ResidueClass::B: return "B";
  }
  return "?";
}

std::string_view to_string(TrivialStatus status) noexcept {
  switch (status) {
    case TrivialStatus::PrimeException: return "PrimeException";
    case TrivialStatus::AlwaysComposite: return "AlwaysComposite";
    case TrivialStatus::Candidate: return "Candidate";
    case TrivialStatus::Unit: return "Unit";
  }
  return "?";
}

}  // namespace wheel6
