#include "paramax/truth_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace paramax {

namespace {

std::size_t word_count(std::size_t vars) {
  return vars < 6 ? 1 : std::size_t{1} << (vars - 6);
}

std::uint64_t low_mask(std::uint64_t len) {
  return len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
}

}  // namespace

TruthTable TruthTable::constant(bool value) {
  TruthTable t;
  t.words_[0] = value ? 1 : 0;
  return t;
}

TruthTable TruthTable::variable(std::size_t index) {
  if (index >= kMaxVars) {
    throw std::length_error("condition atom index exceeds the supported width");
  }
  TruthTable t;
  t.vars_ = index + 1;
  t.words_.assign(word_count(t.vars_), 0);
  if (index < 6) {
    std::uint64_t w = 0;
    for (std::uint64_t j = 0; j < t.assignments(); ++j) {
      if ((j >> index) & 1) w |= std::uint64_t{1} << j;
    }
    t.words_[0] = w;
  } else {
    for (std::size_t w = 0; w < t.words_.size(); ++w) {
      if ((w >> (index - 6)) & 1) t.words_[w] = ~std::uint64_t{0};
    }
  }
  return t;
}

std::uint64_t TruthTable::used_mask() const {
  return vars_ >= 6 ? ~std::uint64_t{0} : low_mask(std::uint64_t{1} << vars_);
}

bool TruthTable::get(std::uint64_t assignment) const {
  const std::uint64_t idx = assignment & (assignments() - 1);
  return ((words_[idx >> 6] >> (idx & 63)) & 1) != 0;
}

bool TruthTable::any() const {
  return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
}

bool TruthTable::all() const {
  if (vars_ < 6) return words_[0] == used_mask();
  return std::all_of(words_.begin(), words_.end(),
                     [](auto w) { return w == ~std::uint64_t{0}; });
}

std::optional<std::uint64_t> TruthTable::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * 64 + static_cast<std::uint64_t>(__builtin_ctzll(words_[w]));
    }
  }
  return std::nullopt;
}

std::uint64_t TruthTable::count() const {
  std::uint64_t n = 0;
  for (auto w : words_) n += static_cast<std::uint64_t>(__builtin_popcountll(w));
  return n;
}

TruthTable TruthTable::extended(std::size_t vars) const {
  if (vars <= vars_) return *this;
  if (vars > kMaxVars) {
    throw std::length_error("condition atom index exceeds the supported width");
  }
  TruthTable t;
  t.vars_ = vars;
  std::vector<std::uint64_t> block = words_;
  if (vars_ < 6) {
    std::uint64_t w = words_[0];
    std::uint64_t len = std::uint64_t{1} << vars_;
    const std::uint64_t target = vars < 6 ? (std::uint64_t{1} << vars) : 64;
    while (len < target) {
      w |= w << len;
      len *= 2;
    }
    block = {w};
  }
  const std::size_t n = word_count(vars);
  t.words_.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.words_[i] = block[i % block.size()];
  return t;
}

std::uint64_t TruthTable::extract(std::uint64_t start, std::uint64_t len) const {
  return (words_[start >> 6] >> (start & 63)) & low_mask(len);
}

bool TruthTable::range_is(std::uint64_t start, std::uint64_t len, bool value) const {
  if (len >= 64) {
    const std::uint64_t want = value ? ~std::uint64_t{0} : 0;
    for (std::uint64_t w = start / 64; w < (start + len) / 64; ++w) {
      if (words_[w] != want) return false;
    }
    return true;
  }
  return extract(start, len) == (value ? low_mask(len) : 0);
}

bool TruthTable::ranges_equal(std::uint64_t a, std::uint64_t b, std::uint64_t len) const {
  if (len >= 64) {
    return std::equal(words_.begin() + static_cast<std::ptrdiff_t>(a / 64),
                      words_.begin() + static_cast<std::ptrdiff_t>((a + len) / 64),
                      words_.begin() + static_cast<std::ptrdiff_t>(b / 64));
  }
  return extract(a, len) == extract(b, len);
}

TruthTable operator&(const TruthTable& a, const TruthTable& b) {
  if (a.vars_ == b.vars_) {
    TruthTable x = a;
    for (std::size_t i = 0; i < x.words_.size(); ++i) x.words_[i] &= b.words_[i];
    return x;
  }
  const bool a_wider = a.vars_ > b.vars_;
  TruthTable x = a_wider ? a : a.extended(b.vars_);
  const TruthTable y = a_wider ? b.extended(a.vars_) : b;
  for (std::size_t i = 0; i < x.words_.size(); ++i) x.words_[i] &= y.words_[i];
  return x;
}

TruthTable operator|(const TruthTable& a, const TruthTable& b) {
  if (a.vars_ == b.vars_) {
    TruthTable x = a;
    for (std::size_t i = 0; i < x.words_.size(); ++i) x.words_[i] |= b.words_[i];
    return x;
  }
  const bool a_wider = a.vars_ > b.vars_;
  TruthTable x = a_wider ? a : a.extended(b.vars_);
  const TruthTable y = a_wider ? b.extended(a.vars_) : b;
  for (std::size_t i = 0; i < x.words_.size(); ++i) x.words_[i] |= y.words_[i];
  return x;
}

TruthTable operator~(const TruthTable& a) {
  TruthTable x = a;
  for (auto& w : x.words_) w = ~w;
  x.words_[0] &= x.used_mask();
  return x;
}

bool operator==(const TruthTable& a, const TruthTable& b) {
  if (a.vars_ == b.vars_) return a.words_ == b.words_;
  const std::size_t m = std::max(a.vars_, b.vars_);
  return a.extended(m).words_ == b.extended(m).words_;
}

bool TruthTable::intersects(const TruthTable& o) const {
  if (vars_ == o.vars_) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  return (*this & o).any();
}

bool TruthTable::implies(const TruthTable& o) const {
  if (vars_ == o.vars_) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  return !(*this & ~o).any();
}

std::size_t TruthTable::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ vars_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace paramax
