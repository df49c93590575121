#pragma once

#include <optional>
#include <vector>

#include "zslab/products.hpp"
#include "zslab/sequence.hpp"

namespace zslab {

// Certifies that S is g-smooth: exponents e_i in [1, n] with g^{e_i} = term,
// their sum below n, and Pi(S) = {g^1, ..., g^sum}.
struct SmoothWitness {
  elem_t generator = 0;
  std::vector<int> exponents;  // ascending
  long long sum = 0;
};

namespace detail {
inline void require_cyclic(const FiniteGroup& g) {
  if (g.order() < 2 || g.max_order() < g.order())
    fail(errc::not_cyclic, "smoothness is defined over cyclic groups of order >= 2; got " +
                               g.descriptor());
}
}  // namespace detail

// The unique e in [1, n] with g^e = t, for every term t of S, ascending.
// The identity term maps to e = n.
inline std::vector<int> exponent_list(const Sequence& s, elem_t g) {
  const FiniteGroup& G = s.group();
  detail::require_cyclic(G);
  G.check_elem(g);
  int n = G.order();
  if (G.order_of(g) != n)
    fail(errc::not_a_generator, G.elem_name(g) + " has order " + std::to_string(G.order_of(g)) +
                                    ", not " + std::to_string(n));
  std::vector<int> dlog(n, 0);
  elem_t p = G.identity();
  for (int e = 1; e <= n; ++e) {
    p = G.mul(p, g);
    dlog[p] = e;
  }
  std::vector<int> out;
  out.reserve((size_t)s.length());
  for (const auto& [t, c] : s.terms())
    for (int i = 0; i < c; ++i) out.push_back(dlog[t]);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<SmoothWitness> is_g_smooth(const Sequence& s, elem_t g,
                                                std::uint64_t state_cap = kDefaultStateCap) {
  if (s.empty()) fail(errc::empty_sequence, "smoothness needs a nonempty sequence");
  SmoothWitness w;
  w.generator = g;
  w.exponents = exponent_list(s, g);
  w.sum = 0;
  for (int e : w.exponents) w.sum += e;
  const FiniteGroup& G = s.group();
  if (w.sum >= G.order()) return std::nullopt;
  Bits expected(G.order());
  elem_t p = G.identity();
  for (long long e = 1; e <= w.sum; ++e) {
    p = G.mul(p, g);
    expected.set(p);
  }
  Bits actual(G.order());
  for (elem_t x : all_subsequence_products(s, state_cap)) actual.set(x);
  if (!(actual == expected)) return std::nullopt;
  return w;
}

// All generators (ascending encoding) for which S is smooth.
inline std::vector<SmoothWitness> smooth_witnesses(const Sequence& s,
                                                   std::uint64_t state_cap = kDefaultStateCap) {
  const FiniteGroup& G = s.group();
  detail::require_cyclic(G);
  std::vector<SmoothWitness> out;
  for (elem_t g : G.elements()) {
    if (G.order_of(g) != G.order()) continue;
    if (auto w = is_g_smooth(s, g, state_cap)) out.push_back(*w);
  }
  return out;
}

// First generator in encoding order certifying S smooth, if any.
inline std::optional<SmoothWitness> smooth_witness(const Sequence& s,
                                                   std::uint64_t state_cap = kDefaultStateCap) {
  const FiniteGroup& G = s.group();
  detail::require_cyclic(G);
  for (elem_t g : G.elements()) {
    if (G.order_of(g) != G.order()) continue;
    if (auto w = is_g_smooth(s, g, state_cap)) return w;
  }
  return std::nullopt;
}

// (k(S), sum(exponent_list)/n): the exact cross number and its upper bound.
inline std::pair<Fraction, Fraction> le1_bound(const Sequence& s, elem_t g) {
  auto exps = exponent_list(s, g);
  long long sum = 0;
  for (int e : exps) sum += e;
  return {s.cross_number(), Fraction(sum, s.group().order())};
}

}  // namespace zslab
