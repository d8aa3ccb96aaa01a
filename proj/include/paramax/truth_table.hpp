#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace paramax {

/// Dense truth table of a boolean function over atoms 0..vars()-1. Bit `i`
/// is the value on the assignment whose bit field is `i`.
class TruthTable {
 public:
  /// Hard ceiling on atoms; a table over this many atoms is 128 KiB.
  static constexpr std::size_t kMaxVars = 20;

  TruthTable() : words_(1, 0) {}

  static TruthTable constant(bool value);
  static TruthTable variable(std::size_t index);

  [[nodiscard]] std::size_t vars() const { return vars_; }
  [[nodiscard]] std::uint64_t assignments() const { return std::uint64_t{1} << vars_; }

  /// Bits of `assignment` at or above vars() are ignored.
  [[nodiscard]] bool get(std::uint64_t assignment) const;
  [[nodiscard]] bool any() const;
  [[nodiscard]] bool all() const;
  [[nodiscard]] std::optional<std::uint64_t> first() const;
  [[nodiscard]] std::uint64_t count() const;

  /// Sets the bit of one assignment, which must be below assignments().
  void set(std::uint64_t assignment) { words_[assignment >> 6] |= std::uint64_t{1} << (assignment & 63); }

  /// Same function over more atoms.
  [[nodiscard]] TruthTable extended(std::size_t vars) const;

  /// Whether the bits in [start, start + len) are all zero / all one; `len`
  /// is a power of two and `start` a multiple of it.
  [[nodiscard]] bool range_is(std::uint64_t start, std::uint64_t len, bool value) const;
  [[nodiscard]] bool ranges_equal(std::uint64_t a, std::uint64_t b, std::uint64_t len) const;

  /// Calls f(assignment) for every satisfying assignment over `vars`
  /// atoms (vars >= vars()), in ascending order.
  template <class F>
  void for_each_set(std::size_t vars, F&& f) const {
    const TruthTable t = extended(vars);
    const std::uint64_t n = t.assignments();
    for (std::size_t w = 0; w < t.words_.size(); ++w) {
      std::uint64_t word = t.words_[w];
      while (word != 0) {
        const auto bit = static_cast<std::uint64_t>(__builtin_ctzll(word));
        const std::uint64_t idx = w * 64 + bit;
        if (idx >= n) return;
        f(idx);
        word &= word - 1;
      }
    }
  }

  friend TruthTable operator&(const TruthTable& a, const TruthTable& b);
  friend TruthTable operator|(const TruthTable& a, const TruthTable& b);
  friend TruthTable operator~(const TruthTable& a);
  /// Semantic equality: tables over different atom counts compare equal when
  /// they denote the same function.
  friend bool operator==(const TruthTable& a, const TruthTable& b);

  /// any(a & b) without building the conjunction.
  [[nodiscard]] bool intersects(const TruthTable& o) const;
  /// a implies b: no assignment in a outside b.
  [[nodiscard]] bool implies(const TruthTable& o) const;

  /// Hash of the exact representation, atom count included.
  [[nodiscard]] std::size_t hash() const;
  [[nodiscard]] bool same_representation(const TruthTable& o) const {
    return vars_ == o.vars_ && words_ == o.words_;
  }

 private:
  [[nodiscard]] std::uint64_t used_mask() const;
  [[nodiscard]] std::uint64_t extract(std::uint64_t start, std::uint64_t len) const;

  std::size_t vars_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace paramax
