#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include <zslab/products.hpp>

using zslab::Certificate;
using zslab::Error;
using zslab::FindMode;
using zslab::FiniteGroup;
using zslab::Fraction;
using zslab::Sequence;
using zslab::elem_t;
using zslab::errc;

namespace {
const FiniteGroup& c6() {
  static FiniteGroup g = FiniteGroup::cyclic(6);
  return g;
}
const FiniteGroup& d3() {
  static FiniteGroup g = FiniteGroup::dihedral(3);
  return g;
}

std::vector<elem_t> sorted(std::vector<elem_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("product sets cover every ordering of the terms", "[products]") {
  // Two non-commuting elements produce both one-sided products.
  auto s = parse_terms(d3(), "a1 b0");
  CHECK(product_set(s) == std::vector<elem_t>{4, 5});

  CHECK(product_set(Sequence(c6())) == std::vector<elem_t>{0});
  CHECK(product_set(parse_terms(c6(), "2 3")) == std::vector<elem_t>{5});
}

TEST_CASE("subsequence products union every nonempty choice", "[products]") {
  auto s = parse_terms(c6(), "1^2 4");
  CHECK(all_subsequence_products(s) == std::vector<elem_t>{0, 1, 2, 4, 5});
  CHECK(all_subsequence_products(Sequence(c6())).empty());
}

TEST_CASE("product-one classification over cyclic groups", "[products]") {
  CHECK(is_product_one(parse_terms(c6(), "1 5")));
  CHECK(is_product_one(parse_terms(c6(), "1 4 1")));
  CHECK_FALSE(is_product_one(parse_terms(c6(), "1 2")));
  CHECK_THROWS_AS(is_product_one(Sequence(c6())), Error);

  CHECK(is_product_one_free(parse_terms(c6(), "1^5")));
  CHECK(is_product_one_free(Sequence(c6())));
  CHECK_FALSE(is_product_one_free(parse_terms(c6(), "1 5")));
  CHECK_FALSE(is_product_one_free(parse_terms(c6(), "1^2 4")));
}

TEST_CASE("product-one classification over nonabelian groups", "[products]") {
  // A reflection pair multiplies to a rotation, never the identity.
  CHECK(is_product_one_free(parse_terms(d3(), "b0 b1")));
  // Some ordering of {a, t0, t1} multiplies out to the identity.
  CHECK(is_product_one(parse_terms(d3(), "a1 b0 b1")));
  CHECK_FALSE(is_product_one(parse_terms(d3(), "a1 b0")));
  CHECK(is_product_one_free(parse_terms(d3(), "a1^2 b0")));
}

TEST_CASE("tiny product-one requires cross number at most one", "[products]") {
  CHECK(is_tiny_product_one(parse_terms(c6(), "1^2 4")));
  CHECK(is_tiny_product_one(parse_terms(c6(), "3^2")));
  CHECK(is_tiny_product_one(parse_terms(c6(), "1 2 3")));
  // Product-one but cross number 2.
  auto c2 = FiniteGroup::cyclic(2);
  CHECK_FALSE(is_tiny_product_one(parse_terms(c2, "1^4")));
  // Cross number fine but not product-one.
  CHECK_FALSE(is_tiny_product_one(parse_terms(c6(), "1 2")));
}

TEST_CASE("witness search returns the first qualifying subsequence", "[products]") {
  auto s = parse_terms(c6(), "1^2 4");
  auto cert = find_product_one_subsequence(s, FindMode::any);
  REQUIRE(cert.has_value());
  CHECK(sorted(cert->witness) == std::vector<elem_t>{1, 1, 4});
  CHECK(cert->cross == Fraction(2, 3));
  CHECK(cert->kind == FindMode::any);
  CHECK(verify_certificate(s, *cert).ok);

  auto tiny = find_product_one_subsequence(parse_terms(c6(), "3^2 1"), FindMode::tiny);
  REQUIRE(tiny.has_value());
  CHECK(sorted(tiny->witness) == std::vector<elem_t>{3, 3});
  CHECK(tiny->cross == Fraction(1));

  CHECK_FALSE(find_product_one_subsequence(parse_terms(c6(), "1^5"), FindMode::any).has_value());
  CHECK_FALSE(find_product_one_subsequence(Sequence(c6()), FindMode::any).has_value());
}

TEST_CASE("witness search separates the three modes", "[products]") {
  // {a, t0, t1} multiplies to the identity only as the whole triple, whose
  // cross number 4/3 exceeds the tiny bound; its length 3 is within the
  // short bound (max element order 3).
  auto s = parse_terms(d3(), "a1 b0 b1");
  auto any = find_product_one_subsequence(s, FindMode::any);
  REQUIRE(any.has_value());
  CHECK(sorted(any->witness) == std::vector<elem_t>{1, 3, 4});
  CHECK(any->cross == Fraction(4, 3));
  CHECK(verify_certificate(s, *any).ok);

  auto short_cert = find_product_one_subsequence(s, FindMode::short_len);
  REQUIRE(short_cert.has_value());
  CHECK(short_cert->witness.size() == 3u);
  CHECK(verify_certificate(s, *short_cert).ok);

  CHECK_FALSE(find_product_one_subsequence(s, FindMode::tiny).has_value());
}

TEST_CASE("minimal product-one means no proper product-one subsequence", "[products]") {
  CHECK(is_minimal_product_one(parse_terms(c6(), "0")));
  CHECK(is_minimal_product_one(parse_terms(c6(), "1 5")));
  CHECK(is_minimal_product_one(parse_terms(c6(), "1^2 4")));
  CHECK(is_minimal_product_one(parse_terms(c6(), "2^2 3 5")));
  // Contains the proper product-one pair {1, 5}.
  CHECK_FALSE(is_minimal_product_one(parse_terms(c6(), "1 5 2 4")));
  // Not product-one at all.
  CHECK_FALSE(is_minimal_product_one(parse_terms(c6(), "1 2")));
  CHECK_THROWS_AS(is_minimal_product_one(Sequence(c6())), Error);
}

TEST_CASE("certificate verification rejects each defect with its reason", "[products]") {
  auto s = parse_terms(c6(), "1^2 4");
  auto good = find_product_one_subsequence(s, FindMode::any).value();
  CHECK(verify_certificate(s, good).reason == "ok");

  Certificate cert = good;
  cert.witness.clear();
  CHECK(verify_certificate(s, cert).reason == "empty-witness");

  cert = good;
  cert.witness.push_back(9);
  CHECK(verify_certificate(s, cert).reason == "element-out-of-range");

  cert = good;
  cert.witness = {1, 1, 1};
  CHECK(verify_certificate(s, cert).reason == "not-a-subsequence");

  cert = good;
  cert.witness = {1, 4};
  cert.cross = Fraction(1, 2);
  CHECK(verify_certificate(s, cert).reason == "product-not-identity");

  cert = good;
  cert.cross = Fraction(1, 7);
  CHECK(verify_certificate(s, cert).reason == "cross-mismatch");

  auto c2 = FiniteGroup::cyclic(2);
  auto long_seq = parse_terms(c2, "1^4");
  Certificate long_cert;
  long_cert.witness = {1, 1, 1, 1};
  long_cert.cross = Fraction(2);
  long_cert.kind = FindMode::short_len;
  CHECK(verify_certificate(long_seq, long_cert).reason == "witness-too-long");
  long_cert.kind = FindMode::tiny;
  CHECK(verify_certificate(long_seq, long_cert).reason == "cross-exceeds-one");
  long_cert.kind = FindMode::any;
  CHECK(verify_certificate(long_seq, long_cert).ok);
}

TEST_CASE("lattice products match the brute-force oracle", "[products]") {
  std::mt19937 rng(20260822u);
  for (const FiniteGroup* g : {&c6(), &d3()}) {
    std::uniform_int_distribution<int> len_dist(0, 6);
    std::uniform_int_distribution<int> elem_dist(0, g->order() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      Sequence s(*g);
      int len = len_dist(rng);
      for (int i = 0; i < len; ++i) s.add((elem_t)elem_dist(rng));
      INFO(g->descriptor() << ": " << s.str());
      CHECK(product_set(s) == oracle_product_set(s));
    }
  }
}

TEST_CASE("the oracle refuses long sequences, the lattice respects its cap", "[products]") {
  try {
    oracle_product_set(parse_terms(c6(), "1^9"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_long);
  }
  try {
    find_product_one_subsequence(parse_terms(c6(), "1^2 4"), FindMode::any, 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::state_space_cap_exceeded);
  }
}
