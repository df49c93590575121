#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <zslab/smooth.hpp>

using zslab::Error;
using zslab::FiniteGroup;
using zslab::Fraction;
using zslab::Sequence;
using zslab::errc;

namespace {
const FiniteGroup& c6() {
  static FiniteGroup g = FiniteGroup::cyclic(6);
  return g;
}
}  // namespace

TEST_CASE("exponent lists are discrete logs in [1, n], ascending", "[smooth]") {
  CHECK(exponent_list(parse_terms(c6(), "1 2"), 1) == std::vector<int>{1, 2});
  // Base 5: 5*5 = 4 mod 6 and 5*5*5*5*5 = 1 mod 6.
  CHECK(exponent_list(parse_terms(c6(), "1 4"), 5) == std::vector<int>{2, 5});
  // The identity term maps to the full order.
  CHECK(exponent_list(parse_terms(c6(), "0"), 1) == std::vector<int>{6});
  CHECK(exponent_list(parse_terms(c6(), "1^3"), 1) == std::vector<int>{1, 1, 1});
}

TEST_CASE("exponent lists require a cyclic group and a true generator", "[smooth]") {
  try {
    exponent_list(parse_terms(FiniteGroup::dihedral(3), "a1"), 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_cyclic);
  }
  try {
    exponent_list(parse_terms(c6(), "1"), 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_generator);
  }
}

TEST_CASE("smoothness certifies an exact product interval", "[smooth]") {
  auto w = is_g_smooth(parse_terms(c6(), "1 2"), 1);
  REQUIRE(w.has_value());
  CHECK(w->generator == 1);
  CHECK(w->exponents == std::vector<int>{1, 2});
  CHECK(w->sum == 3);

  auto w5 = is_g_smooth(parse_terms(c6(), "1^5"), 1);
  REQUIRE(w5.has_value());
  CHECK(w5->sum == 5);

  // Products {1, 4, 5} skip 2 and 3, so no interval matches.
  CHECK_FALSE(is_g_smooth(parse_terms(c6(), "1 4"), 1).has_value());
  // Exponent sum reaching the order disqualifies.
  CHECK_FALSE(is_g_smooth(parse_terms(c6(), "0"), 1).has_value());
  CHECK_THROWS_AS(is_g_smooth(Sequence(c6()), 1), Error);
}

TEST_CASE("smooth witnesses scan generators in encoding order", "[smooth]") {
  auto c5 = FiniteGroup::cyclic(5);
  // {2} is an interval only for base 2 itself.
  auto w = smooth_witness(parse_terms(c5, "2"));
  REQUIRE(w.has_value());
  CHECK(w->generator == 2);
  CHECK(w->exponents == std::vector<int>{1});

  auto all = smooth_witnesses(parse_terms(c6(), "1^5"));
  REQUIRE(all.size() == 1u);
  CHECK(all[0].generator == 1);

  CHECK_FALSE(smooth_witness(parse_terms(c6(), "1 4")).has_value());
  CHECK(smooth_witnesses(parse_terms(c6(), "0")).empty());
}

TEST_CASE("cross numbers never exceed the exponent-sum bound", "[smooth]") {
  auto [k, bound] = le1_bound(parse_terms(c6(), "2 3"), 1);
  CHECK(k == Fraction(5, 6));
  CHECK(bound == Fraction(5, 6));

  auto [k0, bound0] = le1_bound(parse_terms(c6(), "0"), 1);
  CHECK(k0 == Fraction(1));
  CHECK(bound0 == Fraction(1));

  auto [k5, bound5] = le1_bound(parse_terms(c6(), "2 3"), 5);
  CHECK(k5 == Fraction(5, 6));
  CHECK(bound5 == Fraction(7, 6));
  CHECK(k5 <= bound5);

  // Exhaustive over every term multiset of length <= 3 and every generator.
  for (int g : {1, 5}) {
    std::vector<int> elems;
    for (int a = 0; a < 6; ++a)
      for (int b = a; b < 6; ++b)
        for (int c = b; c < 6; ++c) {
          auto s = Sequence::of(c6(), {(zslab::elem_t)a, (zslab::elem_t)b, (zslab::elem_t)c});
          auto [ks, bs] = le1_bound(s, (zslab::elem_t)g);
          INFO(s.str() << " base " << g);
          CHECK(ks <= bs);
        }
  }
}
