#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include <zslab/group.hpp>

using zslab::Error;
using zslab::FiniteGroup;
using zslab::GroupKind;
using zslab::PresFamily;
using zslab::elem_t;
using zslab::errc;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::invalid_parameter;
}

std::vector<std::vector<int>> table_of(const FiniteGroup& g) {
  std::vector<std::vector<int>> rows(g.order(), std::vector<int>(g.order()));
  for (elem_t x = 0; x < g.order(); ++x)
    for (elem_t y = 0; y < g.order(); ++y) rows[x][y] = g.mul(x, y);
  return rows;
}

}  // namespace

TEST_CASE("cyclic groups expose order, inverses, and element orders", "[group]") {
  auto g = FiniteGroup::cyclic(6);
  CHECK(g.order() == 6);
  CHECK(g.kind() == GroupKind::cyclic);
  CHECK(g.abelian());
  CHECK(g.identity() == 0);
  CHECK(g.exponent() == 6);
  CHECK(g.max_order() == 6);
  CHECK(g.descriptor() == "C6");
  CHECK(g.mul(2, 5) == 1);
  CHECK(g.inverse(2) == 4);
  CHECK(g.inverse(0) == 0);
  CHECK(g.order_of(2) == 3);
  CHECK(g.order_of(3) == 2);
  CHECK(g.order_of(5) == 6);
  CHECK(g.pow(1, 10) == 4);
  CHECK(g.pow(1, -1) == 5);
  CHECK(g.elements() == std::vector<elem_t>{0, 1, 2, 3, 4, 5});

  CHECK(FiniteGroup::cyclic(1).order() == 1);
  CHECK(code_of([] { FiniteGroup::cyclic(0); }) == errc::invalid_parameter);
}

TEST_CASE("dihedral groups satisfy the reflection relations", "[group]") {
  auto g = FiniteGroup::dihedral(3);
  CHECK(g.order() == 6);
  CHECK_FALSE(g.abelian());
  CHECK(g.descriptor() == "D3");
  CHECK(g.max_order() == 3);
  CHECK(g.exponent() == 6);

  elem_t a = g.parse_elem("a1");
  elem_t t = g.parse_elem("b0");
  CHECK(a == 1);
  CHECK(t == 3);
  CHECK(g.pow(a, 3) == g.identity());
  CHECK(g.mul(t, t) == g.identity());
  // t * a == a^-1 * t
  CHECK(g.mul(t, a) == g.mul(g.inverse(a), t));
  for (int i = 0; i < 3; ++i) CHECK(g.order_of(g.refl(i)) == 2);
  CHECK(g.elem_name(4) == "b1");
  CHECK(g.elem_name(2) == "a2");

  CHECK(code_of([] { FiniteGroup::dihedral(2); }) == errc::invalid_parameter);
}

TEST_CASE("dicyclic groups satisfy the twisting relations", "[group]") {
  auto g = FiniteGroup::dicyclic(2);
  CHECK(g.order() == 8);
  CHECK_FALSE(g.abelian());
  CHECK(g.descriptor() == "Q2");
  CHECK(g.exponent() == 4);
  CHECK(g.max_order() == 4);

  elem_t a = g.parse_elem("a1");
  elem_t t = g.parse_elem("b0");
  // t^2 == a^n, t * a == a^-1 * t, t has order 4.
  CHECK(g.mul(t, t) == g.pow(a, 2));
  CHECK(g.mul(t, a) == g.mul(g.inverse(a), t));
  CHECK(g.order_of(t) == 4);
  CHECK(g.order_of(g.pow(a, 2)) == 2);
  for (elem_t x : g.elements())
    if (x != g.identity()) CHECK((g.order_of(x) == 2 || g.order_of(x) == 4));

  CHECK(code_of([] { FiniteGroup::dicyclic(1); }) == errc::invalid_parameter);
}

TEST_CASE("element access is range checked", "[group]") {
  auto g = FiniteGroup::cyclic(4);
  CHECK(code_of([&] { g.mul(0, 4); }) == errc::element_out_of_range);
  CHECK(code_of([&] { g.inverse(-1); }) == errc::element_out_of_range);
  CHECK(code_of([&] { g.order_of(99); }) == errc::element_out_of_range);
}

TEST_CASE("element tokens round-trip and reject malformed input", "[group]") {
  auto c = FiniteGroup::cyclic(6);
  for (elem_t x : c.elements()) CHECK(c.parse_elem(c.elem_name(x)) == x);
  auto d = FiniteGroup::dihedral(4);
  for (elem_t x : d.elements()) CHECK(d.parse_elem(d.elem_name(x)) == x);

  CHECK(code_of([&] { c.parse_elem("x"); }) == errc::parse_error);
  CHECK(code_of([&] { c.parse_elem("7"); }) == errc::parse_error);
  CHECK(code_of([&] { d.parse_elem("a"); }) == errc::parse_error);
  CHECK(code_of([&] { d.parse_elem("c1"); }) == errc::parse_error);
  CHECK(code_of([&] { d.parse_elem("a9"); }) == errc::parse_error);
}

TEST_CASE("subgroup closure collects exactly the generated elements", "[group]") {
  auto c = FiniteGroup::cyclic(6);
  CHECK(c.subgroup_generated({2}) == std::vector<elem_t>{0, 2, 4});
  CHECK(c.subgroup_generated({}) == std::vector<elem_t>{0});
  auto d = FiniteGroup::dihedral(3);
  CHECK(d.subgroup_generated({d.parse_elem("a1"), d.parse_elem("b0")}).size() == 6u);
  CHECK(d.subgroup_generated({d.parse_elem("b0")}) ==
        std::vector<elem_t>{0, d.parse_elem("b0")});
}

TEST_CASE("cayley tables load after full validation", "[group]") {
  auto d3 = FiniteGroup::dihedral(3);
  auto g = FiniteGroup::from_table("sym3", table_of(d3));
  CHECK(g.kind() == GroupKind::table);
  CHECK(g.descriptor() == "T:sym3");
  CHECK(g.order() == 6);
  CHECK_FALSE(g.abelian());
  CHECK(g.max_order() == 3);
  for (elem_t x = 0; x < 6; ++x)
    for (elem_t y = 0; y < 6; ++y) CHECK(g.mul(x, y) == d3.mul(x, y));
}

TEST_CASE("cayley table validation pinpoints the first defect", "[group]") {
  auto rows = table_of(FiniteGroup::cyclic(3));

  SECTION("entry out of range") {
    rows[1][2] = 9;
    CHECK(code_of([&] { FiniteGroup::from_table("bad", rows); }) == errc::invalid_table);
  }
  SECTION("ragged row") {
    rows[2].pop_back();
    CHECK(code_of([&] { FiniteGroup::from_table("bad", rows); }) == errc::invalid_table);
  }
  SECTION("identity must sit at index 0") {
    // Swap the roles of 0 and 1 in the first row only; 0 stops being an identity.
    std::swap(rows[0][0], rows[0][1]);
    CHECK(code_of([&] { FiniteGroup::from_table("bad", rows); }) == errc::invalid_table);
  }
  SECTION("rows must be permutations") {
    rows[1][1] = rows[1][2];
    CHECK(code_of([&] { FiniteGroup::from_table("bad", rows); }) == errc::invalid_table);
  }
  SECTION("associativity is required, not just a latin square") {
    // Smallest loop that is not a group: every row/column is a permutation
    // and 0 is a two-sided identity, but 1*1 = 0 forces non-associativity.
    std::vector<std::vector<int>> loop = {
        {0, 1, 2, 3, 4},
        {1, 0, 3, 4, 2},
        {2, 4, 0, 1, 3},
        {3, 2, 4, 0, 1},
        {4, 3, 1, 2, 0},
    };
    try {
      FiniteGroup::from_table("loop5", loop);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::invalid_table);
      CHECK(std::string(e.what()).find("associative") != std::string::npos);
    }
  }
  SECTION("empty table") {
    CHECK(code_of([] { FiniteGroup::from_table("bad", {}); }) == errc::invalid_table);
  }
}

TEST_CASE("presentation enumeration finds every standard generator choice", "[group]") {
  auto c6 = FiniteGroup::cyclic(6);
  auto gens = enumerate_presentations(c6, PresFamily::cyclic_generator);
  REQUIRE(gens.size() == 2u);
  CHECK(gens[0].g == 1);
  CHECK(gens[1].g == 5);
  CHECK(gens[0].h == -1);

  auto d3 = FiniteGroup::dihedral(3);
  auto dp = enumerate_presentations(d3, PresFamily::dihedral_pair);
  CHECK(dp.size() == 6u);  // 2 rotations of full rotation order x 3 reflections
  for (const auto& p : dp) {
    CHECK(d3.order_of(p.g) == 3);
    CHECK(d3.mul(p.h, p.h) == d3.identity());
    CHECK(d3.mul(p.h, p.g) == d3.mul(d3.inverse(p.g), p.h));
  }

  auto q8 = FiniteGroup::dicyclic(2);
  auto qp = enumerate_presentations(q8, PresFamily::dicyclic_pair);
  CHECK(qp.size() == 24u);
  for (const auto& p : qp) {
    CHECK(q8.order_of(p.g) == 4);
    CHECK(q8.mul(p.h, p.h) == q8.pow(p.g, 2));
    CHECK(q8.mul(p.h, p.g) == q8.mul(q8.inverse(p.g), p.h));
  }
}

TEST_CASE("presentation families must match the native kind", "[group]") {
  auto c6 = FiniteGroup::cyclic(6);
  CHECK(code_of([&] { enumerate_presentations(c6, PresFamily::dihedral_pair); }) ==
        errc::family_mismatch);
  auto d3 = FiniteGroup::dihedral(3);
  CHECK(code_of([&] { enumerate_presentations(d3, PresFamily::cyclic_generator); }) ==
        errc::family_mismatch);
}

TEST_CASE("table groups may probe any presentation family", "[group]") {
  auto g = FiniteGroup::from_table("sym3", table_of(FiniteGroup::dihedral(3)));
  CHECK(enumerate_presentations(g, PresFamily::dihedral_pair).size() == 6u);
  CHECK(enumerate_presentations(g, PresFamily::cyclic_generator).empty());
  CHECK(enumerate_presentations(g, PresFamily::dicyclic_pair).empty());
}

TEST_CASE("automorphism search returns every structure-preserving bijection", "[group]") {
  CHECK(automorphisms(FiniteGroup::cyclic(6)).size() == 2u);
  CHECK(automorphisms(FiniteGroup::cyclic(7)).size() == 6u);
  CHECK(automorphisms(FiniteGroup::dihedral(3)).size() == 6u);
  CHECK(automorphisms(FiniteGroup::dicyclic(2)).size() == 24u);

  auto g = FiniteGroup::dihedral(3);
  for (const auto& phi : automorphisms(g)) {
    CHECK(phi[g.identity()] == g.identity());
    for (elem_t x : g.elements())
      for (elem_t y : g.elements()) CHECK(phi[g.mul(x, y)] == g.mul(phi[x], phi[y]));
  }
}

TEST_CASE("automorphism search refuses groups past its order cap", "[group]") {
  CHECK(code_of([] { automorphisms(FiniteGroup::cyclic(25)); }) == errc::cap_exceeded);
  CHECK(automorphisms(FiniteGroup::cyclic(24)).size() == 8u);
}
