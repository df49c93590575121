#pragma once

#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zslab/fraction.hpp"
#include "zslab/group.hpp"

namespace zslab {

inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t(1) << 22;

// A finite unordered multiset of group elements, stored in
// support/multiplicity form sorted by element encoding. The group must
// outlive every sequence over it.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(const FiniteGroup& g) : group_(&g) {}

  static Sequence of(const FiniteGroup& g, const std::vector<elem_t>& elems) {
    Sequence s(g);
    for (elem_t e : elems) s.add(e);
    return s;
  }

  // pairs must be sorted by element with positive multiplicities.
  static Sequence from_pairs(const FiniteGroup& g, std::vector<std::pair<elem_t, int>> pairs) {
    Sequence s(g);
    s.terms_ = std::move(pairs);
    return s;
  }

  const FiniteGroup& group() const { return *group_; }
  const std::vector<std::pair<elem_t, int>>& terms() const { return terms_; }

  void add(elem_t e, int count = 1) {
    group_->check_elem(e);
    if (count <= 0) fail(errc::invalid_parameter, "multiplicity must be positive");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const auto& p, elem_t v) { return p.first < v; });
    if (it != terms_.end() && it->first == e)
      it->second += count;
    else
      terms_.insert(it, {e, count});
  }

  long long length() const {
    long long n = 0;
    for (const auto& [e, c] : terms_) n += c;
    return n;
  }

  bool empty() const { return terms_.empty(); }

  int multiplicity(elem_t e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const auto& p, elem_t v) { return p.first < v; });
    return (it != terms_.end() && it->first == e) ? it->second : 0;
  }

  std::vector<elem_t> support() const {
    std::vector<elem_t> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
  }

  int height() const {
    int h = 0;
    for (const auto& [e, c] : terms_) h = std::max(h, c);
    return h;
  }

  bool is_square_free() const { return height() <= 1; }

  // k(S) = sum over terms of 1/ord(term), exact.
  Fraction cross_number() const {
    Fraction k(0);
    for (const auto& [e, c] : terms_) k += Fraction(c, group_->order_of(e));
    return k;
  }

  // All terms expanded, ascending by encoding.
  std::vector<elem_t> expand() const {
    std::vector<elem_t> out;
    out.reserve((size_t)length());
    for (const auto& [e, c] : terms_)
      for (int i = 0; i < c; ++i) out.push_back(e);
    return out;
  }

  friend Sequence concat(const Sequence& a, const Sequence& b) {
    Sequence s = a;
    for (const auto& [e, c] : b.terms_) s.add(e, c);
    return s;
  }

  // S with T removed; T must divide S. Reports the first element (ascending)
  // whose multiplicity falls short.
  friend Sequence remove(const Sequence& s, const Sequence& t) {
    Sequence out(s.group());
    for (const auto& [e, c] : t.terms_)
      if (s.multiplicity(e) < c)
        fail(errc::not_a_subsequence,
             "element " + s.group().elem_name(e) + " has multiplicity " +
                 std::to_string(s.multiplicity(e)) + " < " + std::to_string(c));
    for (const auto& [e, c] : s.terms_) {
      int left = c - t.multiplicity(e);
      if (left > 0) out.terms_.push_back({e, left});
    }
    return out;
  }

  bool divides(const Sequence& s) const {  // *this | s
    for (const auto& [e, c] : terms_)
      if (s.multiplicity(e) < c) return false;
    return true;
  }

  template <class Pred>
  Sequence restrict(Pred&& keep) const {
    Sequence out(*group_);
    for (const auto& [e, c] : terms_)
      if (keep(e)) out.terms_.push_back({e, c});
    return out;
  }

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.group_ == b.group_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Sequence& a, const Sequence& b) { return !(a == b); }
  friend bool operator<(const Sequence& a, const Sequence& b) { return a.terms_ < b.terms_; }

  // Bare term literal, e.g. "1^5" or "a1^2 b0 b1 b2". Group context implied.
  std::string str() const {
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += ' ';
      out += group_->elem_name(e);
      if (c > 1) out += "^" + std::to_string(c);
    }
    return out;
  }

  // Full literal with the group descriptor prefix, e.g. "C6:1^5".
  std::string full_literal() const { return group_->descriptor() + ":" + str(); }

 private:
  const FiniteGroup* group_ = nullptr;
  std::vector<std::pair<elem_t, int>> terms_;
};

// --- literal parsing ---

// Splits "C6:1^5 4" into {"C6", "1^5 4"}. No validation beyond the colon.
inline std::pair<std::string, std::string> split_literal(const std::string& lit) {
  auto colon = lit.rfind(':');
  if (colon == std::string::npos)
    fail(errc::parse_error, "sequence literal needs a '<group>:' prefix: '" + lit + "'");
  return {lit.substr(0, colon), lit.substr(colon + 1)};
}

// Parses a bare term list ("1^5", "a1^2 b0 b1 b2", "") for a known group.
// Positions in diagnostics are 0-based character offsets into the input.
inline Sequence parse_terms(const FiniteGroup& g, const std::string& text) {
  Sequence s(g);
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace((unsigned char)text[i])) { ++i; continue; }
    size_t start = i;
    while (i < text.size() && !std::isspace((unsigned char)text[i])) ++i;
    std::string tok = text.substr(start, i - start);
    std::string elem_part = tok;
    int mult = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      elem_part = tok.substr(0, caret);
      std::string mult_part = tok.substr(caret + 1);
      if (mult_part.empty() ||
          !std::all_of(mult_part.begin(), mult_part.end(),
                       [](char c) { return std::isdigit((unsigned char)c); }))
        fail(errc::parse_error, "bad multiplicity '" + mult_part + "' at position " +
                                    std::to_string(start) + " in '" + text + "'");
      long long m = 0;
      for (char c : mult_part) {
        m = m * 10 + (c - '0');
        if (m > 1000000) fail(errc::parse_error, "multiplicity too large at position " +
                                                     std::to_string(start));
      }
      if (m < 1) fail(errc::parse_error, "multiplicity must be >= 1 at position " +
                                             std::to_string(start) + " in '" + text + "'");
      mult = (int)m;
    }
    elem_t e;
    try {
      e = g.parse_elem(elem_part);
    } catch (const Error& err) {
      if (err.code() != errc::parse_error) throw;
      fail(errc::parse_error, std::string(err.what()) + " at position " + std::to_string(start) +
                                  " in '" + text + "'");
    }
    s.add(e, mult);
  }
  return s;
}

// --- sub-multiset iteration ---

struct SubMultisetOptions {
  std::optional<Fraction> max_cross;
  std::optional<long long> max_length;
  bool nonempty = false;
  std::uint64_t state_cap = kDefaultStateCap;
};

// Number of sub-multisets prod(v_g + 1), minus one if nonempty. Saturates at
// 2^63-1 instead of overflowing.
inline std::uint64_t count_sub_multisets(const Sequence& s, bool nonempty = false) {
  std::uint64_t count = 1;
  const std::uint64_t cap = ~std::uint64_t(0) >> 1;
  for (const auto& [e, c] : s.terms()) {
    std::uint64_t f = (std::uint64_t)c + 1;
    if (count > cap / f) { count = cap; break; }
    count *= f;
  }
  return count - (nonempty ? 1 : 0);
}

// Visits sub-multisets of s in mixed-radix order: the multiplicity of the
// smallest support element varies fastest. fn may return void or bool; a
// false return stops the walk.
template <class Fn>
inline void for_each_sub_multiset(const Sequence& s, const SubMultisetOptions& opts, Fn&& fn) {
  if (count_sub_multisets(s) + 1 > opts.state_cap)
    fail(errc::state_space_cap_exceeded,
         "sub-multiset lattice of " + std::to_string(count_sub_multisets(s) + 1) +
             " states exceeds cap " + std::to_string(opts.state_cap));
  const auto& terms = s.terms();
  int m = (int)terms.size();
  std::vector<int> digits(m, 0);
  std::vector<Fraction> unit(m);
  for (int i = 0; i < m; ++i) unit[i] = Fraction(1, s.group().order_of(terms[i].first));
  Fraction cross(0);
  long long len = 0;
  bool stop = false;
  auto emit = [&](bool is_empty) {
    if (stop) return;
    if (is_empty && opts.nonempty) return;
    if (opts.max_length && len > *opts.max_length) return;
    if (opts.max_cross && cross > *opts.max_cross) return;
    std::vector<std::pair<elem_t, int>> pairs;
    for (int i = 0; i < m; ++i)
      if (digits[i] > 0) pairs.push_back({terms[i].first, digits[i]});
    Sequence sub = Sequence::from_pairs(s.group(), std::move(pairs));
    if constexpr (std::is_convertible_v<decltype(fn(sub)), bool>) {
      if (!fn(sub)) stop = true;
    } else {
      fn(sub);
    }
  };
  emit(true);
  while (!stop) {
    int i = 0;
    while (i < m && digits[i] == terms[i].second) {
      digits[i] = 0;
      ++i;
    }
    if (i == m) break;
    ++digits[i];
    // Recompute running totals after the carry (cheap: support is small).
    len = 0;
    cross = Fraction(0);
    for (int j = 0; j < m; ++j) {
      len += digits[j];
      if (digits[j]) cross += Fraction(digits[j], s.group().order_of(terms[j].first));
    }
    emit(false);
  }
}

// Materialized variant (respects the same order and filters).
inline std::vector<Sequence> sub_multisets(const Sequence& s, const SubMultisetOptions& opts = {}) {
  std::vector<Sequence> out;
  for_each_sub_multiset(s, opts, [&](const Sequence& sub) { out.push_back(sub); });
  return out;
}

}  // namespace zslab
