#pragma once

#include <atomic>
#include <chrono>
#include <climits>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "zslab/parallel.hpp"
#include "zslab/products.hpp"
#include "zslab/sequence.hpp"

namespace zslab {

// Hereditary freeness properties: closed under taking sub-multisets, which
// is what makes DFS with pruning exhaustive.
enum class FreeProperty { product_one_free, short_free, tiny_free };

inline const char* to_string(FreeProperty p) {
  switch (p) {
    case FreeProperty::product_one_free: return "product-one-free";
    case FreeProperty::short_free: return "short-free";
    case FreeProperty::tiny_free: return "tiny-free";
  }
  return "?";
}

inline FreeProperty free_property_from_string(const std::string& s) {
  if (s == "product-one-free") return FreeProperty::product_one_free;
  if (s == "short-free") return FreeProperty::short_free;
  if (s == "tiny-free") return FreeProperty::tiny_free;
  fail(errc::invalid_parameter, "unknown property '" + s + "'");
}

struct SearchLimits {
  std::uint64_t node_cap = 100'000'000;
  std::uint64_t state_cap = kDefaultStateCap;
  std::int64_t wall_ms_cap = 0;  // 0 = unlimited
  int jobs = 1;                  // <= 0: resolve via ZSLAB_JOBS / hardware
};

struct SearchStats {
  std::uint64_t nodes = 0;
  bool exhaustive = true;
};

namespace detail {

enum class PushResult { ok, violates, budget };

// --- incremental checker, abelian fast path ---
//
// Keeps, per DFS depth, reachability tables of subsequence products. Since
// products are order-independent here, "some sub-multiset of weight c
// multiplies to x" is a knapsack over the multiset, and extending S by e only
// adds sub-multisets T*e with T | S. The pre-push test is therefore a probe
// for inverse(e) in the parent tables and costs O(cap) bit tests.
class AbelianChecker {
 public:
  AbelianChecker(const FiniteGroup& g, FreeProperty prop, const SearchLimits&)
      : g_(&g), prop_(prop), words_(words_for(g.order())) {
    if (prop == FreeProperty::product_one_free) {
      cap_ = 0;  // one row: products of all nonempty sub-multisets
    } else if (prop == FreeProperty::short_free) {
      cap_ = g.max_order();
    } else {
      cap_ = g.exponent();
    }
    unit_.assign(g.order(), 1);
    if (prop == FreeProperty::tiny_free)
      for (elem_t e = 0; e < g.order(); ++e) unit_[e] = g.exponent() / g.order_of(e);
    rows_ = cap_ + 1;
    table_.assign((size_t)rows_ * words_, 0);
    if (prop != FreeProperty::product_one_free) bit_set(row(0), g.identity());
    rmul_.assign(g.order(), {});
  }

  PushResult try_push(elem_t e) {
    const elem_t inv = g_->inverse(e);
    if (prop_ == FreeProperty::product_one_free) {
      if (e == g_->identity() || bit_test(row(0), inv)) return PushResult::violates;
    } else {
      int w = unit_[e];
      for (int c = 0; c + w <= cap_; ++c)
        if (bit_test(row(c), inv)) return PushResult::violates;
    }
    commit(e);
    return PushResult::ok;
  }

  void pop() {
    table_ = std::move(snapshots_.back());
    snapshots_.pop_back();
  }

 private:
  bits_word* row(int c) { return &table_[(size_t)c * words_]; }

  const std::vector<elem_t>& perm(elem_t e) {
    auto& p = rmul_[e];
    if (p.empty()) {
      p.resize(g_->order());
      for (elem_t x = 0; x < g_->order(); ++x) p[x] = g_->mul(x, e);
    }
    return p;
  }

  void commit(elem_t e) {
    snapshots_.push_back(table_);
    const std::vector<bits_word>& parent = snapshots_.back();
    const auto& p = perm(e);
    if (prop_ == FreeProperty::product_one_free) {
      bits_or_permuted(row(0), &parent[0], words_, p.data());
      bit_set(row(0), e);
    } else {
      int w = unit_[e];
      for (int c = cap_; c >= w; --c)
        bits_or_permuted(row(c), &parent[(size_t)(c - w) * words_], words_, p.data());
    }
  }

  const FiniteGroup* g_;
  FreeProperty prop_;
  int words_;
  int cap_ = 0;
  int rows_ = 1;
  std::vector<int> unit_;
  std::vector<bits_word> table_;
  std::vector<std::vector<bits_word>> snapshots_;
  std::vector<std::vector<elem_t>> rmul_;
};

// --- incremental checker, general (lattice slab) path ---
//
// Maintains pi() over the sub-multiset lattice of the current DFS sequence.
// A push appends exactly the slab of states whose count of e is maximal; the
// DFS invariant (the parent already satisfied the property) means only those
// states need inspecting. States above the property's weight cap stay empty:
// all their supersets are above it too.
class LatticeChecker {
 public:
  LatticeChecker(const FiniteGroup& g, FreeProperty prop, const SearchLimits& lim)
      : g_(&g), words_(words_for(g.order())), state_cap_(lim.state_cap) {
    has_cap_ = prop != FreeProperty::product_one_free;
    cap_ = 0;
    unit_.assign(g.order(), 1);
    if (prop == FreeProperty::short_free) {
      cap_ = (std::uint32_t)g.max_order();
    } else if (prop == FreeProperty::tiny_free) {
      cap_ = (std::uint32_t)g.exponent();
      for (elem_t e = 0; e < g.order(); ++e) unit_[e] = g.exponent() / g.order_of(e);
    }
    buf_.assign(words_, 0);
    bit_set(buf_.data(), g.identity());
    weight_.assign(1, 0);
    rmul_.assign(g.order(), {});
  }

  PushResult try_push(elem_t e) {
    const bool new_support = supp_.empty() || supp_.back().e != e;
    const std::uint64_t stride = new_support ? size_ : supp_.back().stride;
    if (size_ + stride > state_cap_) return PushResult::budget;
    const auto& pe = perm(e);
    buf_.resize((size_ + stride) * words_, 0);
    weight_.resize(size_ + stride, 0);
    bits_word* base = buf_.data();
    // Odometer over the support entries below e.
    const int low = (int)supp_.size() - (new_support ? 0 : 1);
    std::vector<int> digits(low, 0);
    const std::uint32_t we = (std::uint32_t)unit_[e];
    bool violated = false;
    for (std::uint64_t r = 0; r < stride && !violated; ++r) {
      const std::uint64_t idx = size_ + r;
      const std::uint64_t parent_e = idx - stride;
      weight_[idx] = weight_[parent_e] + we;
      if (!has_cap_ || weight_[idx] <= cap_) {
        bits_word* out = base + idx * words_;
        bits_or_permuted(out, base + parent_e * words_, words_, pe.data());
        for (int j = 0; j < low; ++j)
          if (digits[j] > 0)
            bits_or_permuted(out, base + (idx - supp_[j].stride) * words_, words_,
                             perm(supp_[j].e).data());
        if (bit_test(out, g_->identity())) violated = true;
      }
      // advance odometer
      int j = 0;
      while (j < low && digits[j] == supp_[j].mult) digits[j++] = 0;
      if (j < low) ++digits[j];
    }
    if (violated) {
      buf_.resize(size_ * words_);
      weight_.resize(size_);
      return PushResult::violates;
    }
    depth_.push_back({size_, new_support});
    if (new_support)
      supp_.push_back({e, 1, stride});
    else
      ++supp_.back().mult;
    size_ += stride;
    return PushResult::ok;
  }

  void pop() {
    auto rec = depth_.back();
    depth_.pop_back();
    if (rec.new_support)
      supp_.pop_back();
    else
      --supp_.back().mult;
    size_ = rec.prev_size;
    buf_.resize(size_ * words_);
    weight_.resize(size_);
  }

 private:
  struct SupportEntry {
    elem_t e;
    int mult;
    std::uint64_t stride;
  };
  struct DepthRec {
    std::uint64_t prev_size;
    bool new_support;
  };

  const std::vector<elem_t>& perm(elem_t e) {
    auto& p = rmul_[e];
    if (p.empty()) {
      p.resize(g_->order());
      for (elem_t x = 0; x < g_->order(); ++x) p[x] = g_->mul(x, e);
    }
    return p;
  }

  const FiniteGroup* g_;
  int words_;
  std::uint64_t state_cap_;
  bool has_cap_ = false;
  std::uint32_t cap_ = 0;
  std::vector<int> unit_;
  std::vector<bits_word> buf_;
  std::vector<std::uint32_t> weight_;
  std::vector<SupportEntry> supp_;
  std::vector<DepthRec> depth_;
  std::uint64_t size_ = 1;
  std::vector<std::vector<elem_t>> rmul_;
};

}  // namespace detail

// What a search run accumulates. All sequence lists end up sorted, so
// results are schedule-independent under any jobs setting.
struct Collector {
  long long collect_exact = -1;
  long long collect_min = -1;
  bool track_max_witnesses = true;
  bool track_cross = false;

  long long max_len = -1;
  std::vector<Sequence> max_witnesses;
  Fraction max_cross{0};
  std::vector<Sequence> cross_witnesses;
  std::vector<Sequence> collected;

  void note(const FiniteGroup& g, const std::vector<elem_t>& elems, const Fraction& cross) {
    long long len = (long long)elems.size();
    auto make_seq = [&]() {
      std::vector<std::pair<elem_t, int>> pairs;
      for (elem_t e : elems) {
        if (!pairs.empty() && pairs.back().first == e)
          ++pairs.back().second;
        else
          pairs.push_back({e, 1});
      }
      return Sequence::from_pairs(g, std::move(pairs));
    };
    if (len > max_len) {
      max_len = len;
      if (track_max_witnesses) {
        max_witnesses.clear();
        max_witnesses.push_back(make_seq());
      }
    } else if (len == max_len && track_max_witnesses) {
      max_witnesses.push_back(make_seq());
    }
    if (track_cross) {
      if (cross > max_cross) {
        max_cross = cross;
        cross_witnesses.clear();
        cross_witnesses.push_back(make_seq());
      } else if (cross == max_cross && !(cross == Fraction(0))) {
        cross_witnesses.push_back(make_seq());
      }
    }
    if (len == collect_exact || (collect_min >= 0 && len >= collect_min))
      collected.push_back(make_seq());
  }

  void merge(Collector&& o) {
    if (o.max_len > max_len) {
      max_len = o.max_len;
      max_witnesses = std::move(o.max_witnesses);
    } else if (o.max_len == max_len) {
      max_witnesses.insert(max_witnesses.end(), o.max_witnesses.begin(), o.max_witnesses.end());
    }
    if (o.max_cross > max_cross) {
      max_cross = o.max_cross;
      cross_witnesses = std::move(o.cross_witnesses);
    } else if (o.max_cross == max_cross) {
      cross_witnesses.insert(cross_witnesses.end(), o.cross_witnesses.begin(),
                             o.cross_witnesses.end());
    }
    collected.insert(collected.end(), o.collected.begin(), o.collected.end());
  }

  void sort_all() {
    std::sort(max_witnesses.begin(), max_witnesses.end());
    std::sort(cross_witnesses.begin(), cross_witnesses.end());
    std::sort(collected.begin(), collected.end());
  }
};

namespace detail {

template <class Checker>
class DfsEngine {
 public:
  using clock = std::chrono::steady_clock;

  DfsEngine(const FiniteGroup& g, FreeProperty prop, const SearchLimits& lim, long long max_depth,
            Collector col, std::atomic<std::uint64_t>* nodes, std::atomic<bool>* stop,
            std::atomic<bool>* truncated, clock::time_point deadline)
      : g_(&g),
        chk_(g, prop, lim),
        max_depth_(max_depth),
        node_cap_(lim.node_cap),
        has_deadline_(lim.wall_ms_cap > 0),
        deadline_(deadline),
        col_(std::move(col)),
        nodes_(nodes),
        stop_(stop),
        truncated_(truncated) {}

  // Re-applies a known-good prefix without noting or counting it.
  void seed(const std::vector<elem_t>& prefix) {
    for (elem_t e : prefix) {
      auto r = chk_.try_push(e);
      if (r != PushResult::ok) fail(errc::invalid_parameter, "seed prefix lost its property");
      stack_.push_back(e);
      cross_ += Fraction(1, g_->order_of(e));
    }
  }

  void note_current() { col_.note(*g_, stack_, cross_); }

  // fan_sink != nullptr: stop at depth max_depth_ and hand the prefix over
  // instead of descending further.
  void dfs(std::vector<std::vector<elem_t>>* fan_sink = nullptr) { walk(next_start(), fan_sink); }

  Collector take_collector() { return std::move(col_); }

 private:
  elem_t next_start() const { return stack_.empty() ? 0 : stack_.back(); }

  void walk(elem_t from, std::vector<std::vector<elem_t>>* fan_sink) {
    if ((long long)stack_.size() >= max_depth_) {
      if (fan_sink) fan_sink->push_back(stack_);
      return;
    }
    for (elem_t e = from; e < g_->order(); ++e) {
      if (stop_->load(std::memory_order_relaxed)) return;
      auto r = chk_.try_push(e);
      if (r == PushResult::violates) continue;
      if (r == PushResult::budget) {
        truncated_->store(true);
        continue;
      }
      std::uint64_t n = nodes_->fetch_add(1, std::memory_order_relaxed) + 1;
      if (n > node_cap_ ||
          (has_deadline_ && (n & 1023) == 0 && clock::now() > deadline_)) {
        truncated_->store(true);
        stop_->store(true);
        chk_.pop();
        return;
      }
      stack_.push_back(e);
      Fraction saved = cross_;
      cross_ += Fraction(1, g_->order_of(e));
      col_.note(*g_, stack_, cross_);
      walk(e, fan_sink);
      cross_ = saved;
      stack_.pop_back();
      chk_.pop();
    }
  }

  const FiniteGroup* g_;
  Checker chk_;
  long long max_depth_;
  std::uint64_t node_cap_;
  bool has_deadline_;
  clock::time_point deadline_;
  Collector col_;
  std::vector<elem_t> stack_;
  Fraction cross_;
  std::atomic<std::uint64_t>* nodes_;
  std::atomic<bool>* stop_;
  std::atomic<bool>* truncated_;
};

template <class Checker>
inline Collector search_with(const FiniteGroup& g, FreeProperty prop, const SearchLimits& lim,
                             long long max_depth, const Collector& proto, SearchStats& stats) {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> truncated{false};
  int jobs = resolve_jobs(lim.jobs);
  Collector result = proto;
  auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(lim.wall_ms_cap);

  const long long fan_depth = 2;
  if (jobs <= 1 || max_depth <= fan_depth) {
    DfsEngine<Checker> eng(g, prop, lim, max_depth, proto, &nodes, &stop, &truncated, deadline);
    eng.note_current();  // the empty sequence always qualifies
    eng.dfs();
    result = eng.take_collector();
  } else {
    // Pass 1: everything of length <= fan_depth, collecting fan-out prefixes.
    std::vector<std::vector<elem_t>> prefixes;
    DfsEngine<Checker> eng(g, prop, lim, fan_depth, proto, &nodes, &stop, &truncated, deadline);
    eng.note_current();
    eng.dfs(&prefixes);
    result = eng.take_collector();
    // Pass 2: independent subtrees, merged in canonical order.
    std::vector<Collector> parts(prefixes.size(), proto);
    parallel_tasks(jobs, prefixes.size(), [&](std::size_t i) {
      DfsEngine<Checker> sub(g, prop, lim, max_depth, proto, &nodes, &stop, &truncated, deadline);
      sub.seed(prefixes[i]);
      sub.dfs();
      parts[i] = sub.take_collector();
    });
    for (auto& p : parts) result.merge(std::move(p));
  }
  stats.nodes = nodes.load();
  stats.exhaustive = !truncated.load();
  result.sort_all();
  return result;
}

inline Collector search_free(const FiniteGroup& g, FreeProperty prop, const SearchLimits& lim,
                             long long max_depth, const Collector& proto, SearchStats& stats) {
  if (g.abelian()) return search_with<AbelianChecker>(g, prop, lim, max_depth, proto, stats);
  return search_with<LatticeChecker>(g, prop, lim, max_depth, proto, stats);
}

}  // namespace detail

// --- public search products ---

struct EnumerationResult {
  std::vector<Sequence> sequences;
  SearchStats stats;
};

// All multisets of exactly the given length with the property, in canonical
// order. reduce_by_automorphisms keeps only the least sequence of each orbit.
inline EnumerationResult enumerate_free_sequences(const FiniteGroup& g, FreeProperty prop,
                                                  long long length,
                                                  bool reduce_by_automorphisms = false,
                                                  const SearchLimits& lim = {}) {
  if (length < 0) fail(errc::invalid_parameter, "length must be >= 0");
  Collector proto;
  proto.collect_exact = length;
  proto.track_max_witnesses = false;
  SearchStats stats;
  Collector out = detail::search_free(g, prop, lim, length, proto, stats);
  EnumerationResult res{std::move(out.collected), stats};
  if (reduce_by_automorphisms) {
    auto autos = automorphisms(g);
    std::vector<Sequence> kept;
    for (const Sequence& s : res.sequences) {
      Sequence least = s;
      for (const auto& phi : autos) {
        Sequence img(g);
        for (const auto& [e, c] : s.terms()) img.add(phi[e], c);
        if (img < least) least = img;
      }
      if (least == s) kept.push_back(s);
    }
    res.sequences = std::move(kept);
  }
  return res;
}

struct InvariantResult {
  std::string invariant;
  long long value = -1;     // d, eta, ti
  Fraction cross;           // k, K
  std::vector<Sequence> witnesses;
  SearchStats stats;
  std::int64_t elapsed_ms = 0;
};

namespace detail {
struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
  }
};

inline InvariantResult max_length_invariant(const FiniteGroup& g, FreeProperty prop,
                                            const char* name, int plus,
                                            const SearchLimits& lim) {
  Timer timer;
  Collector proto;
  InvariantResult res;
  res.invariant = name;
  res.witnesses.clear();
  SearchStats stats;
  Collector out = search_free(g, prop, lim, LLONG_MAX, proto, stats);
  res.value = out.max_len + plus;
  res.witnesses = std::move(out.max_witnesses);
  res.stats = stats;
  res.elapsed_ms = timer.ms();
  return res;
}
}  // namespace detail

// d(G): longest product-one-free length, with all extremal sequences.
inline InvariantResult small_davenport(const FiniteGroup& g, const SearchLimits& lim = {}) {
  return detail::max_length_invariant(g, FreeProperty::product_one_free, "d", 0, lim);
}

// eta(G) = 1 + longest short-free length; witnesses are the short-free
// sequences of that longest length.
inline InvariantResult eta(const FiniteGroup& g, const SearchLimits& lim = {}) {
  return detail::max_length_invariant(g, FreeProperty::short_free, "eta", 1, lim);
}

// ti(G) = 1 + longest tiny-free length.
inline InvariantResult ti(const FiniteGroup& g, const SearchLimits& lim = {}) {
  return detail::max_length_invariant(g, FreeProperty::tiny_free, "ti", 1, lim);
}

// k(G): largest cross number over product-one-free sequences.
inline InvariantResult small_cross_number(const FiniteGroup& g, const SearchLimits& lim = {}) {
  detail::Timer timer;
  Collector proto;
  proto.track_max_witnesses = false;
  proto.track_cross = true;
  InvariantResult res;
  res.invariant = "k";
  SearchStats stats;
  Collector out = detail::search_free(g, FreeProperty::product_one_free, lim, LLONG_MAX, proto, stats);
  res.cross = out.max_cross;
  res.witnesses = std::move(out.cross_witnesses);
  res.stats = stats;
  res.elapsed_ms = timer.ms();
  return res;
}

// Every minimal product-one sequence, canonical order. A minimal sequence is
// a product-one-free sequence extended by one final element, so the walk
// visits free sequences and classifies each boundary extension with a full
// lattice. Minimal sequences never exceed length |G| (their distinct-prefix
// bound), which the tests pin down separately.
inline EnumerationResult enumerate_minimal_product_one(const FiniteGroup& g,
                                                       const SearchLimits& lim = {}) {
  struct Walker {
    const FiniteGroup& g;
    const SearchLimits& lim;
    detail::LatticeChecker chk;
    std::vector<elem_t> stack;
    std::vector<Sequence> found;
    SearchStats stats;

    Walker(const FiniteGroup& gg, const SearchLimits& ll)
        : g(gg), lim(ll), chk(gg, FreeProperty::product_one_free, ll) {}

    void walk(elem_t from) {
      for (elem_t e = from; e < g.order(); ++e) {
        if (stats.nodes >= lim.node_cap) {
          stats.exhaustive = false;
          return;
        }
        ++stats.nodes;
        auto r = chk.try_push(e);
        if (r == detail::PushResult::budget) {
          stats.exhaustive = false;
          continue;
        }
        if (r == detail::PushResult::violates) {
          // S*e has a product-one subsequence through e; minimal iff that
          // subsequence is the whole of S*e.
          Sequence cand = Sequence::of(g, stack);
          cand.add(e);
          detail::ProductLattice lat(cand, detail::ProductLattice::Prune::none, lim.state_cap,
                                     true);
          auto idx = lat.first_identity();
          if (idx && *idx == lat.top()) found.push_back(cand);
          continue;
        }
        stack.push_back(e);
        walk(e);
        stack.pop_back();
        chk.pop();
      }
    }
  };
  Walker w(g, lim);
  w.walk(0);
  std::sort(w.found.begin(), w.found.end());
  return {std::move(w.found), w.stats};
}

// K(G): largest cross number over minimal product-one sequences.
inline InvariantResult big_cross_number_K(const FiniteGroup& g, const SearchLimits& lim = {}) {
  detail::Timer timer;
  InvariantResult res;
  res.invariant = "K";
  auto mins = enumerate_minimal_product_one(g, lim);
  res.stats = mins.stats;
  for (const Sequence& s : mins.sequences) {
    Fraction k = s.cross_number();
    if (k > res.cross) {
      res.cross = k;
      res.witnesses.clear();
      res.witnesses.push_back(s);
    } else if (k == res.cross) {
      res.witnesses.push_back(s);
    }
  }
  res.elapsed_ms = timer.ms();
  return res;
}

// --- extremal families ---

// Instantiates the named closed-form family over every presentation of G and
// deduplicates. Families ending in _d are product-one free, _eta short-free,
// _ti tiny-free, each of the respective extremal length.
inline std::vector<Sequence> extremal_family(const FiniteGroup& g, const std::string& family_id) {
  std::set<Sequence> out;
  auto add = [&](const Sequence& s) { out.insert(s); };
  if (family_id == "cyclic_ti") {
    int n = g.order();
    for (const auto& p : enumerate_presentations(g, PresFamily::cyclic_generator)) {
      Sequence s(g);
      if (n >= 2) s.add(p.g, n - 1);
      add(s);
    }
  } else if (family_id == "dihedral_d" || family_id == "dihedral_eta" ||
             family_id == "dihedral_ti") {
    auto pres = enumerate_presentations(g, PresFamily::dihedral_pair);
    int n = g.order() / 2;
    for (const auto& p : pres) {
      if (family_id == "dihedral_ti") {
        // g^[n-1] * (h, hg, ..., hg^{n-1})
        Sequence s(g);
        s.add(p.g, n - 1);
        for (int i = 0; i < n; ++i) s.add(g.mul(p.h, g.pow(p.g, i)));
        add(s);
      } else {
        Sequence s(g);
        s.add(p.g, n - 1);
        s.add(p.h);
        add(s);
        if (n == 3) {
          // h * gh * g^2 h
          Sequence x(g);
          for (int i = 0; i < 3; ++i) x.add(g.mul(g.pow(p.g, i), p.h));
          add(x);
        }
      }
    }
  } else if (family_id == "dicyclic_d" || family_id == "dicyclic_eta" ||
             family_id == "dicyclic_ti") {
    auto pres = enumerate_presentations(g, PresFamily::dicyclic_pair);
    int n = g.order() / 4;
    for (const auto& p : pres) {
      Sequence s(g);
      s.add(p.g, 2 * n - 1);
      s.add(p.h);
      add(s);
      if (n == 2 && family_id != "dicyclic_ti") {
        Sequence x(g);  // h^[3] * g
        x.add(p.h, 3);
        x.add(p.g);
        add(x);
        Sequence y(g);  // h^[3] * gh
        y.add(p.h, 3);
        y.add(g.mul(p.g, p.h));
        add(y);
      }
    }
  } else {
    fail(errc::invalid_parameter, "unknown extremal family '" + family_id + "'");
  }
  return {out.begin(), out.end()};
}

inline const std::vector<std::string>& extremal_family_ids() {
  static const std::vector<std::string> ids = {
      "cyclic_ti",  "dihedral_d", "dihedral_eta", "dihedral_ti",
      "dicyclic_d", "dicyclic_eta", "dicyclic_ti"};
  return ids;
}

}  // namespace zslab
