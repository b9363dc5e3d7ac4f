#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace adnil {

/// Fixed-width bitset over positive-root indices. Large enough for every
/// system whose positive roots number at most 128 (E8 has 120).
class RootSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr RootSet() = default;

  static RootSet first_n(int n) {
    RootSet s;
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  bool empty() const { return (words_[0] | words_[1]) == 0; }

  /// Lowest member, or -1.
  int first() const {
    if (words_[0]) return std::countr_zero(words_[0]);
    if (words_[1]) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  bool is_subset_of(const RootSet& other) const {
    return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
  }
  bool intersects(const RootSet& other) const {
    return (words_[0] & other.words_[0]) != 0 || (words_[1] & other.words_[1]) != 0;
  }

  RootSet& operator|=(const RootSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  RootSet& operator&=(const RootSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  RootSet& operator-=(const RootSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }
  friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
  friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
  friend RootSet operator-(RootSet a, const RootSet& b) { return a -= b; }

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::uint64_t word(int w) const { return words_[w]; }

  friend bool operator==(const RootSet&, const RootSet&) = default;

  /// Numeric order of the membership word, bit i carrying weight 2^i.
  friend std::strong_ordering operator<=>(const RootSet& a, const RootSet& b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

 private:
  std::array<std::uint64_t, 2> words_{};
};

}  // namespace adnil

template <>
struct std::hash<adnil::RootSet> {
  std::size_t operator()(const adnil::RootSet& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.word(0) * 0x9E3779B97F4A7C15ull ^ s.word(1));
  }
};
