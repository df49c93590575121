#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <zslab/theorems.hpp>

using zslab::CheckParams;
using zslab::CheckReport;
using zslab::CheckStatus;
using zslab::Error;
using zslab::Fraction;
using zslab::SearchLimits;
using zslab::errc;
using zslab::run_check;
using zslab::t31_threshold;

TEST_CASE("smoothness length threshold minimizes over prime divisors", "[theorems]") {
  CHECK(t31_threshold(18) == Fraction(25, 2));
  CHECK(t31_threshold(8) == Fraction(9, 2));
  CHECK(t31_threshold(20) == Fraction(33, 2));
  CHECK(t31_threshold(12) == Fraction(25, 2));
  CHECK(t31_threshold(9) == Fraction(5));
  CHECK(t31_threshold(3) == Fraction(2));
  CHECK(t31_threshold(7) == Fraction(4));
  CHECK(t31_threshold(16) == Fraction(17, 2));

  try {
    t31_threshold(2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::n_too_small);
  }
}

TEST_CASE("check registry lists and dispatches every check", "[theorems][checks]") {
  const auto& ids = zslab::check_ids();
  CHECK(ids.size() == 15u);
  try {
    run_check("C99");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::unknown_check);
  }
}

TEST_CASE("ti over cyclic groups equals the order", "[theorems][checks]") {
  auto rep = run_check("C1", {{"n", "2..8"}});
  CHECK(rep.check == "C1");
  CHECK(rep.status == CheckStatus::pass);
  CHECK(rep.details.size() == 7u);
  CHECK(rep.params.at("n") == "2..8");
}

TEST_CASE("tiny-free inverse sets over cyclic groups are generator powers",
          "[theorems][checks]") {
  CHECK(run_check("C2", {{"n", "3..8"}}).status == CheckStatus::pass);
}

TEST_CASE("long free sequences over cyclic groups are smooth", "[theorems][checks]") {
  CHECK(run_check("C3a", {{"n", "3..6"}}).status == CheckStatus::pass);
}

TEST_CASE("long tiny-free sequences are smooth above the threshold", "[theorems][checks]") {
  CHECK(run_check("C3b", {{"n", "8,9"}}).status == CheckStatus::pass);
}

TEST_CASE("a threshold above the longest tiny-free length is vacuous", "[theorems][checks]") {
  auto rep = run_check("C3b", {{"n", "12"}});
  CHECK(rep.status == CheckStatus::pass);
  bool vacuous = false;
  for (const auto& d : rep.details)
    if (d.note.find("vacuous") != std::string::npos) vacuous = true;
  CHECK(vacuous);
}

TEST_CASE("nine-tenths-length tiny-free sequences are smooth", "[theorems][checks]") {
  CHECK(run_check("C3c", {{"n", "10"}}).status == CheckStatus::pass);
}

TEST_CASE("cross numbers respect the exponent-sum bound and smooth extensions",
          "[theorems][checks]") {
  auto rep = run_check("C4", {{"n", "3..5"}, {"n2", "3..5"}, {"samples", "200"}});
  CHECK(rep.status == CheckStatus::pass);
  CHECK(rep.params.count("seed") == 1u);
}

TEST_CASE("prime-power minimal sequences are tiny and pack greedily", "[theorems][checks]") {
  auto rep = run_check("C5", {{"n", "2,3,4,5"}, {"packing", "4"}, {"samples", "100"}});
  CHECK(rep.status == CheckStatus::pass);
}

TEST_CASE("dihedral invariants and inverse sets match the closed forms", "[theorems][checks]") {
  CHECK(run_check("C6a", {{"n", "3..4"}}).status == CheckStatus::pass);
  CHECK(run_check("C6b", {{"n", "3..4"}}).status == CheckStatus::pass);
  CHECK(run_check("C6c", {{"n", "3..4"}}).status == CheckStatus::pass);
}

TEST_CASE("dicyclic invariants and inverse sets match the closed forms", "[theorems][checks]") {
  CHECK(run_check("C7a", {{"n", "2"}}).status == CheckStatus::pass);
  CHECK(run_check("C7b", {{"n", "2"}}).status == CheckStatus::pass);
}

TEST_CASE("dicyclic witness sequences stay tiny-free; small ti is reported",
          "[theorems][checks]") {
  auto rep = run_check("C7c", {{"n", "2..6"}, {"report_n", "2"}});
  CHECK(rep.status == CheckStatus::pass);
  bool reported = false;
  for (const auto& d : rep.details)
    if (d.note.find("report-only") != std::string::npos) reported = true;
  CHECK(reported);
}

TEST_CASE("coset-heavy dicyclic sequences are surveyed, not asserted", "[theorems][checks]") {
  auto rep = run_check("C8", {{"n", "2"}});
  REQUIRE(rep.status == CheckStatus::report_only);
  REQUIRE_FALSE(rep.details.empty());
  const auto& d = rep.details.front();
  CHECK(d.observed.find("/") != std::string::npos);
  REQUIRE_FALSE(d.witness.empty());

  // The reported counterexample replays: it has no tiny product-one part.
  auto [desc, terms] = zslab::split_literal(d.witness);
  auto g = zslab::io::parse_group(desc);
  auto s = parse_terms(g, terms);
  CHECK(s.length() == 4);
  CHECK_FALSE(find_product_one_subsequence(s, zslab::FindMode::tiny).has_value());
}

TEST_CASE("the invariant chain holds across the group zoo", "[theorems][checks]") {
  CHECK(run_check("C9", {{"groups", "C2,C3,C4,D3,Q2"}}).status == CheckStatus::pass);
}

TEST_CASE("budget-limited checks degrade to report-only, never to silent passes",
          "[theorems][checks]") {
  SearchLimits tight;
  tight.node_cap = 10;
  auto rep = run_check("C1", {{"n", "10"}}, tight);
  CHECK(rep.status == CheckStatus::report_only);
  bool noted = false;
  for (const auto& d : rep.details)
    if (d.note.find("budget") != std::string::npos) noted = true;
  CHECK(noted);
}

TEST_CASE("check reports serialize with their full shape", "[theorems][checks]") {
  auto rep = run_check("C1", {{"n", "2..4"}});
  auto j = zslab::check_report_to_json(rep);
  CHECK(j.at("check") == "C1");
  CHECK(j.at("status") == "pass");
  CHECK(j.at("params").at("n") == "2..4");
  CHECK(j.at("details").is_array());
  CHECK(j.at("details").size() == 3u);
  CHECK(j.contains("elapsed_ms"));
}
