#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "medianforge/antichain.hpp"
#include "medianforge/errors.hpp"
#include "medianforge/free_median.hpp"
#include "oracles.hpp"

using namespace medianforge;

namespace {

constexpr BaseMask a = 1, b = 2, c = 4, d = 8;

FmsElement triangle() { return FmsElement(FmsOpen(3, {a | b, b | c, a | c})); }

}  // namespace

TEST_CASE("generators") {
  const auto g = fms_generator(3, 1);
  CHECK(g.family() == std::vector<BaseMask>{b});
  for (BaseMask s = 0; s < 8; ++s) CHECK(fms_eval(g, s) == ((s & b) != 0));
  CHECK(fms_generator(3, 0) != fms_generator(3, 2));
  CHECK_THROWS_AS(fms_generator(3, 3), MalformedInput);
}

TEST_CASE("open canonical form") {
  const FmsOpen x(3, {a | b | c, b | c, a});
  CHECK(x.family() == std::vector<BaseMask>{a, b | c});
  CHECK_THROWS_AS(FmsOpen(3, {0}), MalformedInput);
  CHECK_THROWS_AS(FmsOpen(2, {c}), MalformedInput);
}

TEST_CASE("negation") {
  CHECK(fms_negate(FmsOpen(3, {a})) == FmsOpen(3, {a}));
  CHECK(fms_negate(FmsOpen(3, {a, b})) == FmsOpen(3, {a | b}));
  CHECK(fms_negate(triangle().open()) == triangle().open());
  CHECK_THROWS_AS(fms_negate(FmsOpen(3, {})), DomainError);

  // Involution and the three membership tests agree on every antichain
  // over a 4-element base.
  std::set<FmsOpen> seen;
  for (std::uint32_t pick = 1; pick < (1U << 15); ++pick) {
    std::vector<BaseMask> fam;
    for (BaseMask s = 1; s < 16; ++s)
      if ((pick >> (s - 1)) & 1) fam.push_back(s);
    const FmsOpen x(4, fam);
    if (!seen.insert(x).second) continue;
    const auto nx = fms_negate(x);
    CHECK(fms_negate(nx) == x);
    const bool fixed = nx == x;
    CHECK(fixed == fms_is_element(x));
    CHECK(fixed == (fms_condition_intersecting(x) && fms_condition_transversal(x)));
    CHECK(fms_from_truth_table(4, fms_truth_table(x)) == x);
  }
  CHECK(seen.size() == 166);  // nonempty antichains of nonempty subsets of a 4-set
}

TEST_CASE("median") {
  const auto x = fms_generator(3, 0), y = fms_generator(3, 1), z = fms_generator(3, 2);
  CHECK(fms_median(x, y, z) == triangle());
  CHECK(fms_median(x, x, y) == x);
  CHECK_THROWS_AS(fms_median(x, y, fms_generator(4, 0)), MalformedInput);

  const auto all = fms_enumerate(4);
  for (const auto& p : all)
    for (const auto& q : all)
      for (const auto& r : all) {
        const auto m = fms_median(p, q, r);
        for (BaseMask s = 0; s < 16; ++s) {
          const int votes = fms_eval(p, s) + fms_eval(q, s) + fms_eval(r, s);
          CHECK(fms_eval(m, s) == (votes >= 2));
        }
      }
}

TEST_CASE("evaluation") {
  CHECK_FALSE(fms_eval(triangle(), a));
  CHECK(fms_eval(triangle(), a | b));
  for (const auto& x : fms_enumerate(4)) {
    CHECK(fms_eval(x, 15));
    CHECK_FALSE(fms_eval(x, 0));
  }
}

TEST_CASE("enumeration counts and oracles") {
  // Frozen from the brute-force definition oracle and the majority closure.
  const std::vector<std::size_t> counts = {1, 2, 4, 12};
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto elems = fms_enumerate(n);
    CHECK(elems.size() == counts[n - 1]);
    CHECK(oracle::fms_elements(static_cast<int>(n)).size() == counts[n - 1]);
    std::set<std::vector<unsigned>> got;
    for (const auto& e : elems) {
      std::vector<unsigned> fam(e.family().begin(), e.family().end());
      std::sort(fam.begin(), fam.end());
      got.insert(fam);
    }
    CHECK(got == oracle::fms_elements(static_cast<int>(n)));

    std::set<Bitset> tables;
    for (const auto& e : elems) tables.insert(fms_truth_table(e.open()));
    const auto closure = fms_majority_closure(n);
    CHECK(std::set<Bitset>(closure.begin(), closure.end()) == tables);
  }
  CHECK(fms_enumerate(5).size() == 81);
  CHECK(fms_majority_closure(5).size() == 81);
  CHECK_THROWS_AS(fms_enumerate(6), GuardExceeded);
  CHECK(fms_enumerate(3)[3] == triangle());
}

TEST_CASE("materialized table is a median algebra") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto m = fms_median_table(n);
    CHECK(m.size() == fms_enumerate(n).size());
    CHECK(check_median_axioms(m.table()).passed());
  }
}

TEST_CASE("permutation action") {
  const auto x = fms_generator(4, 0).open();
  CHECK(fms_permute(x, {2, 0, 1, 3}) == fms_generator(4, 2).open());
  const std::vector<std::size_t> perm = {1, 2, 3, 0};
  for (const auto& e : fms_enumerate(4)) CHECK(fms_is_element(fms_permute(e.open(), perm)));
}

TEST_CASE("text round trip") {
  CHECK(to_string(triangle()) == "{{a,b},{a,c},{b,c}}");
  CHECK(to_string(FmsOpen(4, {d, a})) == "{{a},{d}}");
  CHECK(parse_fms(3, "{{b,c},{a,b},{a,c}}") == triangle().open());
  for (const auto& e : fms_enumerate(4)) CHECK(parse_fms(4, to_string(e)) == e.open());
  CHECK_THROWS_AS(parse_fms(3, "{{a,z}}"), MalformedInput);
  CHECK_THROWS_AS(parse_fms(3, "{{a,b}"), MalformedInput);
}

TEST_CASE("incremental dualization agrees with the subset scan") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> member(1, (1u << 7) - 1);
  const auto bits = [](std::uint32_t f) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t b = 1; b <= f; b <<= 1)
      if (f & b) out.push_back(b);
    return out;
  };
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint32_t> family(1 + trial % 5);
    for (auto& f : family) f = member(rng);
    family = antichain::minimalize(std::move(family));
    std::vector<std::uint32_t> scan;
    for (std::uint32_t s = 1; s < (1u << 7); ++s)
      if (antichain::is_transversal(family, s)) scan.push_back(s);
    CHECK(antichain::minimal_transversals_berge(family, bits) == antichain::minimalize(std::move(scan)));
  }
}
