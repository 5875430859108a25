#ifndef ABCU_CANDIDATE_SET_HPP
#define ABCU_CANDIDATE_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace abcu {

using CandidateId = int;

inline constexpr int kMaxCandidates = 64;

// A set of candidate ids in [0, 64) packed into one word. Ordering and
// equality are those of the bitmask, which makes "ascending bitmask" the
// canonical enumeration order everywhere in the library.
class CandidateSet {
public:
  constexpr CandidateSet() noexcept = default;
  constexpr explicit CandidateSet(std::uint64_t bits) noexcept : bits_(bits) {}
  constexpr CandidateSet(std::initializer_list<CandidateId> ids) noexcept {
    for (CandidateId c : ids) insert(c);
  }

  static constexpr CandidateSet all(int m) noexcept {
    return CandidateSet(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }
  static CandidateSet of(const std::vector<CandidateId>& ids) noexcept {
    CandidateSet s;
    for (CandidateId c : ids) s.insert(c);
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(CandidateId c) const noexcept { return (bits_ >> c) & 1U; }
  constexpr void insert(CandidateId c) noexcept { bits_ |= std::uint64_t{1} << c; }
  constexpr void erase(CandidateId c) noexcept { bits_ &= ~(std::uint64_t{1} << c); }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool subset_of(CandidateSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(CandidateSet other) const noexcept { return (bits_ & other.bits_) != 0; }
  /// Smallest id in the set; undefined on the empty set.
  constexpr CandidateId front() const noexcept { return std::countr_zero(bits_); }

  std::vector<CandidateId> ids() const {
    std::vector<CandidateId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename Fn> constexpr void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(static_cast<CandidateId>(std::countr_zero(b)));
  }

  friend constexpr CandidateSet operator|(CandidateSet a, CandidateSet b) noexcept { return CandidateSet(a.bits_ | b.bits_); }
  friend constexpr CandidateSet operator&(CandidateSet a, CandidateSet b) noexcept { return CandidateSet(a.bits_ & b.bits_); }
  friend constexpr CandidateSet operator-(CandidateSet a, CandidateSet b) noexcept { return CandidateSet(a.bits_ & ~b.bits_); }
  constexpr CandidateSet& operator|=(CandidateSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr CandidateSet& operator&=(CandidateSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr CandidateSet& operator-=(CandidateSet o) noexcept { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(CandidateSet, CandidateSet) noexcept = default;
  friend constexpr auto operator<=>(CandidateSet a, CandidateSet b) noexcept { return a.bits_ <=> b.bits_; }

private:
  std::uint64_t bits_ = 0;
};

/// A committee is a candidate set whose size is the committee size k.
using Committee = CandidateSet;

// Scatter the low bits of `packed` onto the set bits of `universe`, in order.
constexpr CandidateSet deposit(std::uint64_t packed, CandidateSet universe) noexcept {
  std::uint64_t out = 0;
  for (std::uint64_t u = universe.bits(); u != 0 && packed != 0; u &= u - 1, packed >>= 1) {
    if (packed & 1U) out |= u & (~u + 1);
  }
  return CandidateSet(out);
}

/// Visit every size-k subset of `universe` in ascending bitmask order. The
/// visitor returns false to stop early; the return value reports whether the
/// scan ran to completion.
template <typename Fn> bool for_each_subset_of_size(CandidateSet universe, int k, Fn&& fn) {
  const int r = universe.size();
  if (k < 0 || k > r) return true;
  if (k == 0) return static_cast<bool>(fn(CandidateSet{}));
  std::uint64_t x = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit_bit = (r == 64) ? 0 : (std::uint64_t{1} << r);
  while (true) {
    if (!fn(deposit(x, universe))) return false;
    // Gosper's hack: next integer with the same popcount
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t y = x + c;
    if (y == 0) return true;
    x = (((x ^ y) >> 2) / c) | y;
    if (limit_bit != 0 && x >= limit_bit) return true;
    if (limit_bit == 0 && y < c) return true;
  }
}

inline std::vector<CandidateSet> subsets_of_size(CandidateSet universe, int k) {
  std::vector<CandidateSet> out;
  for_each_subset_of_size(universe, k, [&](CandidateSet s) { out.push_back(s); return true; });
  return out;
}

} // namespace abcu

#endif // ABCU_CANDIDATE_SET_HPP
