#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace paramax {

/// A subset of the program's assumptions as a bit field; bit i is the
/// assumption with index i.
class AssumptionSet {
 public:
  using Bits = std::uint32_t;

  constexpr AssumptionSet() = default;
  constexpr explicit AssumptionSet(Bits bits) : bits_(bits) {}

  static constexpr AssumptionSet full(std::size_t width) {
    return AssumptionSet(width >= 32 ? ~Bits{0} : (Bits{1} << width) - 1);
  }
  static constexpr AssumptionSet single(std::size_t i) {
    return AssumptionSet(Bits{1} << i);
  }

  [[nodiscard]] constexpr Bits bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  [[nodiscard]] constexpr bool contains(std::size_t i) const {
    return i < 32 && ((bits_ >> i) & 1U) != 0;
  }
  [[nodiscard]] constexpr AssumptionSet with(std::size_t i) const {
    return AssumptionSet(bits_ | (Bits{1} << i));
  }
  [[nodiscard]] constexpr AssumptionSet without(std::size_t i) const {
    return AssumptionSet(bits_ & ~(Bits{1} << i));
  }
  [[nodiscard]] constexpr bool subset_of(AssumptionSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }

  friend constexpr AssumptionSet operator&(AssumptionSet a, AssumptionSet b) {
    return AssumptionSet(a.bits_ & b.bits_);
  }
  friend constexpr AssumptionSet operator|(AssumptionSet a, AssumptionSet b) {
    return AssumptionSet(a.bits_ | b.bits_);
  }
  friend constexpr bool operator==(AssumptionSet, AssumptionSet) = default;
  friend constexpr auto operator<=>(AssumptionSet, AssumptionSet) = default;

 private:
  Bits bits_ = 0;
};

/// "{a, b}" using assumption labels.
std::string render(AssumptionSet s, const std::vector<std::string>& labels);

}  // namespace paramax
