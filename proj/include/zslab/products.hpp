#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "zslab/bits.hpp"
#include "zslab/sequence.hpp"

namespace zslab {

enum class FindMode { any, short_len, tiny };

inline const char* to_string(FindMode m) {
  switch (m) {
    case FindMode::any: return "any";
    case FindMode::short_len: return "short";
    case FindMode::tiny: return "tiny";
  }
  return "?";
}

inline FindMode find_mode_from_string(const std::string& s) {
  if (s == "any") return FindMode::any;
  if (s == "short") return FindMode::short_len;
  if (s == "tiny") return FindMode::tiny;
  fail(errc::invalid_parameter, "unknown find mode '" + s + "' (want any|short|tiny)");
}

// An ordered witness: multiplying the witness elements left to right yields
// the identity. cross is k(witness) as emitted; verify recomputes it.
struct Certificate {
  std::vector<elem_t> witness;
  FindMode kind = FindMode::any;
  Fraction cross;
};

struct VerifyResult {
  bool ok = false;
  std::string reason;  // "ok" or a reason code
  explicit operator bool() const { return ok; }
};

namespace detail {

// Dynamic program over the sub-multiset lattice of S. State idx encodes
// multiplicities in mixed radix (smallest support element = fastest digit);
// pi(idx) is the set of products over all orderings of that sub-multiset,
// computed as pi(T) = union over x in supp(T) of pi(T - x) * x. Light states
// (under the active weight cap) are computed before any state that needs
// them, because removing an element always decreases the index.
class ProductLattice {
 public:
  enum class Prune { none, length, cross };

  ProductLattice(const Sequence& s, Prune prune, std::uint64_t state_cap = kDefaultStateCap,
                 bool stop_at_first_identity = false)
      : g_(&s.group()), prune_(prune) {
    const auto& terms = s.terms();
    m_ = (int)terms.size();
    supp_.reserve(m_);
    mult_.reserve(m_);
    for (const auto& [e, c] : terms) {
      supp_.push_back(e);
      mult_.push_back(c);
    }
    size_ = 1;
    stride_.assign(m_, 0);
    for (int i = 0; i < m_; ++i) {
      stride_[i] = size_;
      std::uint64_t f = (std::uint64_t)mult_[i] + 1;
      if (size_ > state_cap / f)
        fail(errc::state_space_cap_exceeded,
             "sub-multiset lattice for '" + s.str() + "' exceeds state cap " +
                 std::to_string(state_cap));
      size_ *= f;
    }
    words_ = words_for(g_->order());
    buf_.assign(size_ * words_, 0);
    // Right-multiplication permutations for the support.
    rmul_.assign((size_t)m_ * g_->order(), 0);
    for (int i = 0; i < m_; ++i)
      for (elem_t x = 0; x < g_->order(); ++x) rmul_[(size_t)i * g_->order() + x] = g_->mul(x, supp_[i]);
    // Per-state prune weight: term length (short) or exponent/ord (cross).
    weight_cap_ = 0;
    unit_weight_.assign(m_, 1);
    if (prune_ == Prune::length) {
      weight_cap_ = g_->max_order();
    } else if (prune_ == Prune::cross) {
      weight_cap_ = g_->exponent();
      for (int i = 0; i < m_; ++i) unit_weight_[i] = g_->exponent() / g_->order_of(supp_[i]);
    }
    if (prune_ != Prune::none) weight_.assign(size_, 0);

    bit_set(&buf_[0], g_->identity());
    std::vector<int> digits(m_, 0);
    for (std::uint64_t idx = 1; idx < size_; ++idx) {
      int carry = 0;
      while (digits[carry] == mult_[carry]) digits[carry++] = 0;
      ++digits[carry];
      if (prune_ != Prune::none) {
        weight_[idx] = weight_[idx - stride_[carry]] + unit_weight_[carry];
        if (weight_[idx] > (std::uint64_t)weight_cap_) continue;  // too heavy: leave empty
      }
      bits_word* out = state(idx);
      for (int i = 0; i < m_; ++i)
        if (digits[i] > 0)
          bits_or_permuted(out, state(idx - stride_[i]), words_, &rmul_[(size_t)i * g_->order()]);
      if (stop_at_first_identity && bit_test(out, g_->identity())) {
        first_identity_ = idx;
        break;
      }
    }
  }

  const FiniteGroup& group() const { return *g_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t top() const { return size_ - 1; }
  int words() const { return words_; }
  bits_word* state(std::uint64_t idx) { return &buf_[idx * words_]; }
  const bits_word* state(std::uint64_t idx) const { return &buf_[idx * words_]; }
  bool has_identity(std::uint64_t idx) const { return bit_test(state(idx), g_->identity()); }
  std::optional<std::uint64_t> first_identity() const { return first_identity_; }
  bool pruned(std::uint64_t idx) const {
    return prune_ != Prune::none && weight_[idx] > (std::uint64_t)weight_cap_;
  }

  std::vector<int> digits_of(std::uint64_t idx) const {
    std::vector<int> d(m_);
    for (int i = 0; i < m_; ++i) {
      d[i] = (int)(idx / stride_[i] % ((std::uint64_t)mult_[i] + 1));
    }
    return d;
  }

  Sequence sequence_of(std::uint64_t idx) const {
    auto d = digits_of(idx);
    std::vector<std::pair<elem_t, int>> pairs;
    for (int i = 0; i < m_; ++i)
      if (d[i] > 0) pairs.push_back({supp_[i], d[i]});
    return Sequence::from_pairs(*g_, std::move(pairs));
  }

  // Reconstructs an ordering of sub-multiset idx whose product is the
  // identity, walking the DP backwards and taking the least usable element
  // as each step's final factor.
  std::vector<elem_t> identity_ordering(std::uint64_t idx) const {
    std::vector<elem_t> rev;
    auto d = digits_of(idx);
    elem_t target = g_->identity();
    while (idx != 0) {
      bool advanced = false;
      for (int i = 0; i < m_; ++i) {
        if (d[i] == 0) continue;
        elem_t prev = g_->mul(target, g_->inverse(supp_[i]));
        std::uint64_t parent = idx - stride_[i];
        if (!pruned(parent) && bit_test(state(parent), prev)) {
          rev.push_back(supp_[i]);
          target = prev;
          idx = parent;
          --d[i];
          advanced = true;
          break;
        }
      }
      if (!advanced) fail(errc::invalid_parameter, "no identity ordering at this state");
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }

 private:
  const FiniteGroup* g_;
  Prune prune_;
  int m_ = 0;
  std::vector<elem_t> supp_;
  std::vector<int> mult_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t size_ = 1;
  int words_ = 1;
  std::vector<bits_word> buf_;
  std::vector<elem_t> rmul_;
  std::vector<std::uint64_t> weight_;
  std::vector<int> unit_weight_;
  int weight_cap_ = 0;
  std::optional<std::uint64_t> first_identity_;
};

}  // namespace detail

// pi(S): products over all orderings of the full sequence. pi(empty) = {1}.
inline std::vector<elem_t> product_set(const Sequence& s,
                                       std::uint64_t state_cap = kDefaultStateCap) {
  detail::ProductLattice lat(s, detail::ProductLattice::Prune::none, state_cap);
  Bits out(s.group().order());
  bits_or(out.w.data(), lat.state(lat.top()), lat.words());
  return out.to_elems();
}

// Pi(S): union of pi(T) over nonempty T | S. Pi(empty) = {}.
inline std::vector<elem_t> all_subsequence_products(const Sequence& s,
                                                    std::uint64_t state_cap = kDefaultStateCap) {
  detail::ProductLattice lat(s, detail::ProductLattice::Prune::none, state_cap);
  Bits out(s.group().order());
  for (std::uint64_t idx = 1; idx < lat.size(); ++idx)
    bits_or(out.w.data(), lat.state(idx), lat.words());
  return out.to_elems();
}

inline bool is_product_one(const Sequence& s, std::uint64_t state_cap = kDefaultStateCap) {
  if (s.empty()) fail(errc::empty_sequence, "is_product_one needs a nonempty sequence");
  detail::ProductLattice lat(s, detail::ProductLattice::Prune::none, state_cap);
  return lat.has_identity(lat.top());
}

inline bool is_product_one_free(const Sequence& s, std::uint64_t state_cap = kDefaultStateCap) {
  detail::ProductLattice lat(s, detail::ProductLattice::Prune::none, state_cap, true);
  return !lat.first_identity().has_value();
}

inline bool is_tiny_product_one(const Sequence& s, std::uint64_t state_cap = kDefaultStateCap) {
  if (s.empty()) fail(errc::empty_sequence, "is_tiny_product_one needs a nonempty sequence");
  return s.cross_number() <= Fraction(1) && is_product_one(s, state_cap);
}

// First qualifying sub-multiset in sub_multisets order, as a certificate.
inline std::optional<Certificate> find_product_one_subsequence(
    const Sequence& s, FindMode mode, std::uint64_t state_cap = kDefaultStateCap) {
  using Prune = detail::ProductLattice::Prune;
  Prune p = mode == FindMode::short_len ? Prune::length
            : mode == FindMode::tiny    ? Prune::cross
                                        : Prune::none;
  detail::ProductLattice lat(s, p, state_cap, true);
  auto idx = lat.first_identity();
  if (!idx) return std::nullopt;
  Certificate cert;
  cert.kind = mode;
  cert.witness = lat.identity_ordering(*idx);
  cert.cross = lat.sequence_of(*idx).cross_number();
  return cert;
}

inline bool is_minimal_product_one(const Sequence& s, std::uint64_t state_cap = kDefaultStateCap) {
  if (s.empty()) fail(errc::empty_sequence, "is_minimal_product_one needs a nonempty sequence");
  detail::ProductLattice lat(s, detail::ProductLattice::Prune::none, state_cap, true);
  auto idx = lat.first_identity();
  return idx && *idx == lat.top();
}

// Checks a certificate against S. Never trusts the stored cross number: it
// is recomputed and must match exactly.
inline VerifyResult verify_certificate(const Sequence& s, const Certificate& cert) {
  const FiniteGroup& g = s.group();
  if (cert.witness.empty()) return {false, "empty-witness"};
  for (elem_t e : cert.witness)
    if (e < 0 || e >= g.order()) return {false, "element-out-of-range"};
  Sequence w = Sequence::of(g, cert.witness);
  if (!w.divides(s)) return {false, "not-a-subsequence"};
  elem_t prod = g.identity();
  for (elem_t e : cert.witness) prod = g.mul(prod, e);
  if (prod != g.identity()) return {false, "product-not-identity"};
  Fraction k = w.cross_number();
  if (k != cert.cross) return {false, "cross-mismatch"};
  if (cert.kind == FindMode::short_len && (long long)cert.witness.size() > g.max_order())
    return {false, "witness-too-long"};
  if (cert.kind == FindMode::tiny && k > Fraction(1)) return {false, "cross-exceeds-one"};
  return {true, "ok"};
}

// Reference implementation of pi(S) by brute force over all distinct
// orderings. Only for short sequences; the tests pit the lattice against it.
inline std::vector<elem_t> oracle_product_set(const Sequence& s, int max_len = 8) {
  if (s.length() > max_len)
    fail(errc::too_long, "oracle_product_set is capped at length " + std::to_string(max_len));
  std::vector<elem_t> elems = s.expand();
  const FiniteGroup& g = s.group();
  Bits out(g.order());
  std::sort(elems.begin(), elems.end());
  do {
    elem_t prod = g.identity();
    for (elem_t e : elems) prod = g.mul(prod, e);
    out.set(prod);
  } while (std::next_permutation(elems.begin(), elems.end()));
  return out.to_elems();
}

}  // namespace zslab
