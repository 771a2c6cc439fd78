#include <doctest.h>

#include <random>

#include "medianforge/errors.hpp"
#include "medianforge/spectral.hpp"
#include "oracles.hpp"

using namespace medianforge;

namespace {

std::vector<MedianTable> zoo() {
  return {shapes::chain(1), shapes::chain(2), shapes::chain(4), shapes::star(3),
          shapes::square(0, 1, 2, 3), shapes::cube(3)};
}

std::vector<std::uint64_t> masks(const std::vector<PrimeConvex>& ps) {
  std::vector<std::uint64_t> out;
  for (const auto& p : ps) out.push_back(p.mask());
  return out;
}

}  // namespace

TEST_CASE("spec: small algebras") {
  CHECK(masks(spec(shapes::chain(1))) == std::vector<std::uint64_t>{0, 1});
  CHECK(masks(spec(shapes::chain(2))) == std::vector<std::uint64_t>{0, 1, 2, 3});
  // Four half-planes of the square plus the empty set and X.
  CHECK(masks(spec(shapes::square(0, 1, 2, 3))) ==
        std::vector<std::uint64_t>{0, 0b0011, 0b0110, 0b1001, 0b1100, 0b1111});
  CHECK(spec(shapes::star(3)).size() == 8);
  CHECK(spec(shapes::cube(3)).size() == 8);
}

TEST_CASE("spec agrees with the brute-force oracle") {
  for (const auto& m : zoo()) {
    const auto ps = spec(m);
    const oracle::Table t(m.table().values().begin(), m.table().values().end());
    auto want = oracle::primes(t, static_cast<int>(m.size()));
    want.insert(want.begin(), 0);
    want.push_back(m.all().mask());
    std::sort(want.begin(), want.end());
    CHECK(masks(ps) == want);
    for (const auto& p : ps) CHECK(std::find(ps.begin(), ps.end(), p.complement()) != ps.end());
  }
  for (const auto& t : oracle::all_median_ops(4)) {
    const auto m = MedianTable::checked(TernaryTable(4, std::vector<ElementId>(t.begin(), t.end())));
    CHECK(spec(m).size() == oracle::primes(t, 4).size() + 2);
  }
}

TEST_CASE("u_set and v_set") {
  const SpectralSpace two(shapes::chain(2));
  CHECK(two.is_full(two.u_set(ElementSubset::none(2))));
  const auto u0 = two.u_point(0);
  CHECK(u0.extension().count() == 2);
  CHECK(u0.contains_prime(two.prime_index(ElementSubset::none(2))));
  CHECK(u0.contains_prime(two.prime_index(ElementSubset::singleton(2, 1))));
  CHECK(two.v_set(ElementSubset::all(2)) == std::vector<PrimeConvex>{ElementSubset::all(2)});

  const SpectralSpace sq(shapes::square(0, 1, 2, 3));
  CHECK(sq.v_set(ElementSubset::of(4, {0, 2})) == std::vector<PrimeConvex>{ElementSubset::all(4)});
  for (std::uint64_t a = 1; a < 16; ++a) {
    const ElementSubset s(4, a);
    auto meet = sq.u_set(ElementSubset::none(4));
    for (auto x : s.elements()) meet = sq.meet(meet, sq.u_point(x));
    CHECK(meet == sq.u_set(s));
  }
}

TEST_CASE("duality and the two hull algorithms") {
  for (const auto& m : zoo()) {
    const auto r = duality_check(m);
    CHECK_MESSAGE(r.passed, r.counterexample);
    CHECK(r.pairs_checked > 0);
    const SpectralSpace s(m);
    const auto n = m.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << std::min<std::size_t>(n, 8)); mask += 3) {
      const ElementSubset a(n, mask);
      ElementSubset hull = m.all();
      for (const auto& p : s.v_set(a)) hull = hull & p;
      CHECK(hull == convex_hull(m, a));
    }
  }
}

TEST_CASE("negation") {
  const SpectralSpace two(shapes::chain(2));
  const auto u = two.join(two.u_point(0), two.u_point(1));
  CHECK(u.extension().count() == 3);
  const auto nu = two.negate(u);
  CHECK(nu == two.u_set(ElementSubset::all(2)));
  CHECK(nu.extension().count() == 1);
  CHECK_THROWS_AS(two.negate(two.u_set(ElementSubset::none(2))), DomainError);

  for (const auto& m : zoo()) {
    if (m.size() < 2) continue;
    const SpectralSpace s(m);
    for (ElementId x = 0; x < m.size(); ++x) CHECK(s.negate(s.u_point(x)) == s.u_point(x));
    const auto lat = s.lattice();
    for (const auto& a : lat) {
      CHECK(s.negate(s.negate(a)) == a);
      for (const auto& b : lat) {
        const auto j = s.join(a, b);
        const auto k = s.meet(a, b);
        if (!s.is_full(j)) CHECK(s.negate(j) == s.meet(s.negate(a), s.negate(b)));
        if (!k.empty()) CHECK(s.negate(k) == s.join(s.negate(a), s.negate(b)));
      }
    }
  }
}

TEST_CASE("invariant opens are the point opens") {
  const auto one = invariant_opens(shapes::chain(1));
  CHECK(one.passed);
  CHECK(one.invariant.size() == 1);

  const auto sq = invariant_opens(shapes::square(0, 1, 2, 3));
  CHECK_MESSAGE(sq.passed, sq.counterexample);
  CHECK(sq.invariant.size() == 4);
  for (auto p : sq.point_of) CHECK(p >= 0);

  for (const auto& m : zoo()) {
    const auto r = invariant_opens(m);
    CHECK_MESSAGE(r.passed, r.counterexample);
    CHECK(r.invariant.size() == m.size());
  }

  std::mt19937 rng(5);
  const SpectralSpace cube(shapes::cube(3));
  std::uniform_int_distribution<ElementId> pick(0, 7);
  for (int k = 0; k < 50; ++k) {
    const ElementId x = pick(rng), y = pick(rng), z = pick(rng);
    CHECK(cube.median(cube.u_point(x), cube.u_point(y), cube.u_point(z)) ==
          cube.u_point(cube.algebra()(x, y, z)));
  }
}

TEST_CASE("locally linear primes are nested or cover") {
  for (const auto& m : {shapes::chain(5), shapes::star(4)}) {
    const auto ps = spec(m);
    for (const auto& p : ps)
      for (const auto& q : ps)
        if (!(p & q).empty() && (p | q) != m.all())
          CHECK((p.is_subset_of(q) || q.is_subset_of(p)));
  }
}

TEST_CASE("from_extension rejects non-down-sets") {
  const SpectralSpace two(shapes::chain(2));
  Bitset ext(4);
  ext.set(two.prime_index(ElementSubset::singleton(2, 0)));
  CHECK_THROWS_AS(two.from_extension(ext), DomainError);
}
