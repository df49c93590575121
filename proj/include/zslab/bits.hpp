#pragma once

#include <cstdint>
#include <vector>

namespace zslab {

// Element sets are bit vectors indexed by element encoding. The search and
// product-set code works on raw word spans inside flat buffers (one
// allocation per lattice, not per state); Bits is the owning convenience
// wrapper for standalone sets.

using bits_word = std::uint64_t;

inline int words_for(int nbits) { return (nbits + 63) / 64; }

inline void bit_set(bits_word* w, int i) { w[i >> 6] |= bits_word(1) << (i & 63); }

inline bool bit_test(const bits_word* w, int i) {
  return (w[i >> 6] >> (i & 63)) & 1;
}

inline void bits_clear(bits_word* w, int nwords) {
  for (int k = 0; k < nwords; ++k) w[k] = 0;
}

inline void bits_or(bits_word* dst, const bits_word* src, int nwords) {
  for (int k = 0; k < nwords; ++k) dst[k] |= src[k];
}

inline bool bits_any(const bits_word* w, int nwords) {
  for (int k = 0; k < nwords; ++k)
    if (w[k]) return true;
  return false;
}

inline bool bits_equal(const bits_word* a, const bits_word* b, int nwords) {
  for (int k = 0; k < nwords; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

template <class F>
inline void bits_for_each(const bits_word* w, int nwords, F&& fn) {
  for (int k = 0; k < nwords; ++k) {
    bits_word x = w[k];
    while (x) {
      int b = __builtin_ctzll(x);
      fn(k * 64 + b);
      x &= x - 1;
    }
  }
}

// dst |= image of src under the permutation perm (perm[i] = where bit i goes).
inline void bits_or_permuted(bits_word* dst, const bits_word* src, int nwords,
                             const std::int32_t* perm) {
  bits_for_each(src, nwords, [&](int i) { bit_set(dst, perm[i]); });
}

struct Bits {
  std::vector<bits_word> w;
  int nbits = 0;

  Bits() = default;
  explicit Bits(int n) : w(words_for(n), 0), nbits(n) {}

  void set(int i) { bit_set(w.data(), i); }
  bool test(int i) const { return bit_test(w.data(), i); }
  bool any() const { return bits_any(w.data(), (int)w.size()); }
  void clear() { bits_clear(w.data(), (int)w.size()); }

  std::vector<std::int32_t> to_elems() const {
    std::vector<std::int32_t> out;
    bits_for_each(w.data(), (int)w.size(), [&](int i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.nbits == b.nbits && a.w == b.w;
  }
};

}  // namespace zslab
