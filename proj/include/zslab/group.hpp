#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "zslab/errors.hpp"

namespace zslab {

using elem_t = std::int32_t;

enum class GroupKind { cyclic, dihedral, dicyclic, table };

inline const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::dihedral: return "dihedral";
    case GroupKind::dicyclic: return "dicyclic";
    case GroupKind::table: return "table";
  }
  return "?";
}

// A finite group with elements encoded as 0..order-1 and identity at 0.
//
// Encodings:
//   cyclic(n)    a^i                 -> i
//   dihedral(n)  a^i tau^e           -> e*n + i     (order 2n, n >= 3)
//   dicyclic(n)  a^i tau^e           -> e*2n + i    (order 4n, n >= 2)
//   table        row/column index in the Cayley table
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int n) {
    if (n < 1) fail(errc::invalid_parameter, "cyclic group needs n >= 1, got " + std::to_string(n));
    return FiniteGroup(GroupKind::cyclic, n, n);
  }

  static FiniteGroup dihedral(int n) {
    if (n < 3) fail(errc::invalid_parameter, "dihedral group needs n >= 3, got " + std::to_string(n));
    return FiniteGroup(GroupKind::dihedral, n, 2 * n);
  }

  static FiniteGroup dicyclic(int n) {
    if (n < 2) fail(errc::invalid_parameter, "dicyclic group needs n >= 2, got " + std::to_string(n));
    return FiniteGroup(GroupKind::dicyclic, n, 4 * n);
  }

  // Validates the table completely: entry ranges, identity row/column at
  // index 0, rows and columns are permutations, associativity. Failure
  // messages carry the first offending index or triple.
  static FiniteGroup from_table(const std::string& name,
                                const std::vector<std::vector<int>>& rows) {
    int k = (int)rows.size();
    if (k < 1) fail(errc::invalid_table, "empty table");
    FiniteGroup g(GroupKind::table, k, k);
    g.name_ = name;
    g.table_.assign((size_t)k * k, 0);
    for (int i = 0; i < k; ++i) {
      if ((int)rows[i].size() != k)
        fail(errc::invalid_table,
             "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                 " entries, expected " + std::to_string(k));
      for (int j = 0; j < k; ++j) {
        int v = rows[i][j];
        if (v < 0 || v >= k)
          fail(errc::invalid_table, "entry out of range at row " + std::to_string(i) +
                                        ", col " + std::to_string(j) + ": " + std::to_string(v));
        g.table_[(size_t)i * k + j] = (elem_t)v;
      }
    }
    for (int j = 0; j < k; ++j)
      if (g.table_[j] != j)
        fail(errc::invalid_table,
             "element 0 is not a left identity at col " + std::to_string(j));
    for (int i = 0; i < k; ++i)
      if (g.table_[(size_t)i * k] != i)
        fail(errc::invalid_table,
             "element 0 is not a right identity at row " + std::to_string(i));
    std::vector<char> seen(k);
    for (int i = 0; i < k; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int j = 0; j < k; ++j) seen[g.table_[(size_t)i * k + j]] = 1;
      for (int j = 0; j < k; ++j)
        if (!seen[j]) fail(errc::invalid_table, "row " + std::to_string(i) + " is not a permutation");
    }
    for (int j = 0; j < k; ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int i = 0; i < k; ++i) seen[g.table_[(size_t)i * k + j]] = 1;
      for (int i = 0; i < k; ++i)
        if (!seen[i]) fail(errc::invalid_table, "col " + std::to_string(j) + " is not a permutation");
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l)
          if (g.mul_raw(g.mul_raw(i, j), l) != g.mul_raw(i, g.mul_raw(j, l)))
            fail(errc::invalid_table, "not associative at triple (" + std::to_string(i) + ", " +
                                          std::to_string(j) + ", " + std::to_string(l) + ")");
    g.finish_construction();
    return g;
  }

  GroupKind kind() const { return kind_; }
  int param() const { return n_; }
  int order() const { return order_; }
  elem_t identity() const { return 0; }
  const std::string& name() const { return name_; }

  std::string descriptor() const {
    switch (kind_) {
      case GroupKind::cyclic: return "C" + std::to_string(n_);
      case GroupKind::dihedral: return "D" + std::to_string(n_);
      case GroupKind::dicyclic: return "Q" + std::to_string(n_);
      case GroupKind::table: return "T:" + name_;
    }
    return "?";
  }

  void check_elem(elem_t x) const {
    if (x < 0 || x >= order_)
      fail(errc::element_out_of_range,
           "element " + std::to_string(x) + " not in [0, " + std::to_string(order_) + ")");
  }

  elem_t mul(elem_t x, elem_t y) const {
    check_elem(x);
    check_elem(y);
    return mul_raw(x, y);
  }

  elem_t inverse(elem_t x) const {
    check_elem(x);
    return inv_[x];
  }

  elem_t pow(elem_t x, long long k) const {
    check_elem(x);
    int d = orders_[x];
    k %= d;
    if (k < 0) k += d;
    elem_t r = 0;
    for (long long i = 0; i < k; ++i) r = mul_raw(r, x);
    return r;
  }

  int order_of(elem_t x) const {
    check_elem(x);
    return orders_[x];
  }

  int max_order() const { return max_order_; }
  int exponent() const { return exponent_; }
  bool abelian() const { return abelian_; }

  std::vector<elem_t> elements() const {
    std::vector<elem_t> out(order_);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }

  // Closure of the generating set under multiplication, sorted ascending.
  std::vector<elem_t> subgroup_generated(const std::vector<elem_t>& gens) const {
    for (elem_t g : gens) check_elem(g);
    std::vector<char> in(order_, 0);
    std::vector<elem_t> queue;
    in[0] = 1;
    queue.push_back(0);
    for (size_t head = 0; head < queue.size(); ++head) {
      elem_t x = queue[head];
      for (elem_t g : gens) {
        elem_t y = mul_raw(x, g);
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
      }
    }
    std::vector<elem_t> out;
    for (elem_t x = 0; x < order_; ++x)
      if (in[x]) out.push_back(x);
    return out;
  }

  // --- encoding helpers (dihedral / dicyclic) ---

  // a^i for i in [0, rot_count); rot_count = n for dihedral, 2n for dicyclic.
  int rot_count() const {
    return kind_ == GroupKind::dihedral ? n_ : kind_ == GroupKind::dicyclic ? 2 * n_ : order_;
  }
  elem_t rot(int i) const { return (elem_t)i; }
  elem_t refl(int i) const { return (elem_t)(rot_count() + i); }
  bool is_refl(elem_t x) const { return x >= rot_count(); }

  // --- element literal tokens ---

  std::string elem_name(elem_t x) const {
    check_elem(x);
    switch (kind_) {
      case GroupKind::cyclic:
      case GroupKind::table: return std::to_string(x);
      default: {
        int m = rot_count();
        return x < m ? "a" + std::to_string(x) : "b" + std::to_string(x - m);
      }
    }
  }

  elem_t parse_elem(const std::string& tok) const {
    auto parse_int = [&](const std::string& s, int lo, int hi, const char* what) -> int {
      if (s.empty()) fail(errc::parse_error, std::string("empty ") + what + " in element token '" + tok + "'");
      for (char c : s)
        if (!std::isdigit((unsigned char)c))
          fail(errc::parse_error, std::string("bad ") + what + " in element token '" + tok + "'");
      long long v = 0;
      for (char c : s) {
        v = v * 10 + (c - '0');
        if (v > hi) break;
      }
      if (v < lo || v >= hi)
        fail(errc::parse_error, "element token '" + tok + "' out of range [0, " + std::to_string(hi) + ")");
      return (int)v;
    };
    switch (kind_) {
      case GroupKind::cyclic:
      case GroupKind::table:
        return (elem_t)parse_int(tok, 0, order_, "index");
      default: {
        if (tok.empty() || (tok[0] != 'a' && tok[0] != 'b'))
          fail(errc::parse_error, "element token '" + tok + "' must start with 'a' or 'b'");
        int m = rot_count();
        int i = parse_int(tok.substr(1), 0, m, "index");
        return tok[0] == 'a' ? rot(i) : refl(i);
      }
    }
  }

 private:
  FiniteGroup(GroupKind k, int n, int order) : kind_(k), n_(n), order_(order) {
    name_ = descriptor();
    if (k != GroupKind::table) finish_construction();
  }

  elem_t mul_raw(elem_t x, elem_t y) const {
    switch (kind_) {
      case GroupKind::cyclic: {
        int s = x + y;
        return s >= n_ ? s - n_ : s;
      }
      case GroupKind::dihedral: {
        int e = x >= n_;
        int i = e ? x - n_ : x;
        int d = y >= n_;
        int j = d ? y - n_ : y;
        int r = e ? i - j : i + j;
        r %= n_;
        if (r < 0) r += n_;
        return (elem_t)((e ^ d) ? n_ + r : r);
      }
      case GroupKind::dicyclic: {
        int m = 2 * n_;
        int e = x >= m;
        int i = e ? x - m : x;
        int d = y >= m;
        int j = d ? y - m : y;
        int r = (e ? i - j : i + j) + ((e & d) ? n_ : 0);
        r %= m;
        if (r < 0) r += m;
        return (elem_t)((e ^ d) ? m + r : r);
      }
      case GroupKind::table: return table_[(size_t)x * order_ + y];
    }
    return 0;
  }

  void finish_construction() {
    orders_.assign(order_, 0);
    inv_.assign(order_, 0);
    exponent_ = 1;
    max_order_ = 1;
    for (elem_t x = 0; x < order_; ++x) {
      int d = 1;
      elem_t p = x;
      while (p != 0) {
        if (mul_raw(p, x) == 0) inv_[x] = p;
        p = mul_raw(p, x);
        ++d;
      }
      if (x == 0) { d = 1; inv_[0] = 0; }
      orders_[x] = d;
      max_order_ = std::max(max_order_, d);
      exponent_ = (int)std::lcm((long long)exponent_, (long long)d);
    }
    abelian_ = true;
    for (elem_t x = 0; x < order_ && abelian_; ++x)
      for (elem_t y = x + 1; y < order_; ++y)
        if (mul_raw(x, y) != mul_raw(y, x)) { abelian_ = false; break; }
  }

  GroupKind kind_;
  int n_;
  int order_;
  std::string name_;
  std::vector<elem_t> table_;
  std::vector<int> orders_;
  std::vector<elem_t> inv_;
  int exponent_ = 1;
  int max_order_ = 1;
  bool abelian_ = true;
};

// --- presentations ---

enum class PresFamily { cyclic_generator, dihedral_pair, dicyclic_pair };

inline const char* to_string(PresFamily f) {
  switch (f) {
    case PresFamily::cyclic_generator: return "cyclic-generator";
    case PresFamily::dihedral_pair: return "dihedral-pair";
    case PresFamily::dicyclic_pair: return "dicyclic-pair";
  }
  return "?";
}

// One way of writing G with standard generators. h is -1 for the
// single-generator family.
struct Presentation {
  elem_t g = -1;
  elem_t h = -1;
};

// Exhaustive relation check over all elements (or pairs), in ascending
// encoding order. Native kinds must match the requested family; table groups
// may request any family and simply get an empty list when nothing fits.
inline std::vector<Presentation> enumerate_presentations(const FiniteGroup& G, PresFamily fam) {
  const bool is_table = G.kind() == GroupKind::table;
  std::vector<Presentation> out;
  switch (fam) {
    case PresFamily::cyclic_generator: {
      if (!is_table && G.kind() != GroupKind::cyclic)
        fail(errc::family_mismatch, "cyclic-generator presentation of a " +
                                        std::string(to_string(G.kind())) + " group");
      for (elem_t g : G.elements())
        if (G.order_of(g) == G.order()) out.push_back({g, -1});
      return out;
    }
    case PresFamily::dihedral_pair: {
      if (!is_table && G.kind() != GroupKind::dihedral)
        fail(errc::family_mismatch, "dihedral-pair presentation of a " +
                                        std::string(to_string(G.kind())) + " group");
      if (G.order() % 2 != 0 || G.order() < 6) return out;
      int n = G.order() / 2;
      for (elem_t g : G.elements()) {
        if (G.order_of(g) != n) continue;
        auto gen = G.subgroup_generated({g});
        std::vector<char> in_g(G.order(), 0);
        for (elem_t x : gen) in_g[x] = 1;
        elem_t ginv = G.inverse(g);
        for (elem_t h : G.elements()) {
          if (in_g[h]) continue;
          if (G.mul(h, h) != G.identity()) continue;
          if (G.mul(h, g) != G.mul(ginv, h)) continue;
          if ((int)G.subgroup_generated({g, h}).size() != G.order()) continue;
          out.push_back({g, h});
        }
      }
      return out;
    }
    case PresFamily::dicyclic_pair: {
      if (!is_table && G.kind() != GroupKind::dicyclic)
        fail(errc::family_mismatch, "dicyclic-pair presentation of a " +
                                        std::string(to_string(G.kind())) + " group");
      if (G.order() % 4 != 0 || G.order() < 8) return out;
      int n = G.order() / 4;
      for (elem_t g : G.elements()) {
        if (G.order_of(g) != 2 * n) continue;
        auto gen = G.subgroup_generated({g});
        std::vector<char> in_g(G.order(), 0);
        for (elem_t x : gen) in_g[x] = 1;
        elem_t gn = G.pow(g, n);
        elem_t ginv = G.inverse(g);
        for (elem_t h : G.elements()) {
          if (in_g[h]) continue;
          if (G.mul(h, h) != gn) continue;
          if (G.mul(h, g) != G.mul(ginv, h)) continue;
          if ((int)G.subgroup_generated({g, h}).size() != G.order()) continue;
          out.push_back({g, h});
        }
      }
      return out;
    }
  }
  return out;
}

// --- automorphisms ---

inline constexpr int kAutomorphismOrderCap = 24;

// All automorphisms as permutation tables, found by brute force over images
// of a greedy generating set. Deterministic: candidates are scanned in
// ascending encoding order, so the result is ordered by image tuple.
inline std::vector<std::vector<elem_t>> automorphisms(const FiniteGroup& G,
                                                      int order_cap = kAutomorphismOrderCap) {
  if (G.order() > order_cap)
    fail(errc::cap_exceeded, "automorphism search capped at order " + std::to_string(order_cap) +
                                 ", group has order " + std::to_string(G.order()));
  // Greedy generating set.
  std::vector<elem_t> gens;
  {
    std::vector<char> in(G.order(), 0);
    in[0] = 1;
    size_t covered = 1;
    for (elem_t x = 0; x < G.order() && covered < (size_t)G.order(); ++x) {
      if (in[x]) continue;
      gens.push_back(x);
      std::fill(in.begin(), in.end(), 0);
      covered = 0;
      for (elem_t y : G.subgroup_generated(gens)) { in[y] = 1; ++covered; }
    }
  }
  int k = (int)gens.size();
  // Derivation of every element as parent * generator, in BFS order.
  struct Step { elem_t elem, parent; int gen; };
  std::vector<Step> derivation;
  {
    std::vector<char> seen(G.order(), 0);
    seen[0] = 1;
    std::vector<elem_t> queue{0};
    for (size_t head = 0; head < queue.size(); ++head) {
      elem_t x = queue[head];
      for (int gi = 0; gi < k; ++gi) {
        elem_t y = G.mul(x, gens[gi]);
        if (!seen[y]) {
          seen[y] = 1;
          derivation.push_back({y, x, gi});
          queue.push_back(y);
        }
      }
    }
  }
  std::vector<std::vector<elem_t>> result;
  std::vector<elem_t> images(k, -1);
  std::vector<std::vector<elem_t>> candidates(k);
  for (int gi = 0; gi < k; ++gi)
    for (elem_t y : G.elements())
      if (G.order_of(y) == G.order_of(gens[gi])) candidates[gi].push_back(y);

  auto try_tuple = [&]() {
    std::vector<elem_t> map(G.order(), -1);
    map[0] = 0;
    for (const Step& s : derivation) map[s.elem] = G.mul(map[s.parent], images[s.gen]);
    std::vector<char> hit(G.order(), 0);
    for (elem_t x = 0; x < G.order(); ++x) {
      if (map[x] < 0 || hit[map[x]]) return;
      hit[map[x]] = 1;
    }
    for (elem_t x = 0; x < G.order(); ++x)
      for (elem_t y = 0; y < G.order(); ++y)
        if (map[G.mul(x, y)] != G.mul(map[x], map[y])) return;
    result.push_back(std::move(map));
  };
  // Odometer over candidate images (lexicographic).
  std::vector<size_t> pos(k, 0);
  if (k == 0) {
    try_tuple();
    return result;
  }
  while (true) {
    for (int gi = 0; gi < k; ++gi) images[gi] = candidates[gi][pos[gi]];
    try_tuple();
    int i = k - 1;
    while (i >= 0 && ++pos[i] == candidates[i].size()) pos[i--] = 0;
    if (i < 0) break;
  }
  return result;
}

}  // namespace zslab
