#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "medianforge/deformation.hpp"
#include "medianforge/errors.hpp"
#include "medianforge/fixtures.hpp"
#include "oracles.hpp"

using namespace medianforge;

namespace {

DeformedGroup example_square(Evaluator eval = Evaluator::Canonical) {
  return DeformedGroup(HMedianSet(FreeProduct(FiniteGroup::trivial(), 4), four_point_square()), eval);
}

DeformedGroup config_group() {
  return DeformedGroup(HMedianSet(FreeProduct(FiniteGroup::cyclic(2), 3, config_names()), config_median()));
}

std::vector<std::string> render(const FreeProduct& fp, const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(fp.to_string(w));
  return out;
}

}  // namespace

TEST_CASE("compatibility") {
  CHECK(check_compat(FiniteGroup::trivial(), 4, four_point_square().table()).passed());
  CHECK(check_compat(FiniteGroup::cyclic(2), 1, shapes::chain(2).table()).passed());
  CHECK(check_compat(FiniteGroup::cyclic(2), 2, z2_two_orbit_chain().table()).passed());
  CHECK(check_compat(FiniteGroup::cyclic(2), 2, z2_two_orbit_square().table()).passed());

  const auto bad = check_compat(FiniteGroup::cyclic(2), 2, shapes::chain(4).table());
  CHECK_FALSE(bad.passed());
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations.front().h == 1);
  CHECK_THROWS_AS(HMedianSet(FreeProduct(FiniteGroup::cyclic(2), 2), shapes::chain(4)), DomainError);
  CHECK(check_compat(FiniteGroup::cyclic(2), 2, z2_two_orbit_chain().table()).locally_linear);
  CHECK_FALSE(check_compat(FiniteGroup::cyclic(2), 2, z2_two_orbit_square().table()).locally_linear);
}

TEST_CASE("mhat on the example square") {
  const auto d = example_square();
  const auto& fp = d.words();
  const auto one = Word();
  const auto x1 = fp.parse("x1"), x2 = fp.parse("x2");
  CHECK(d.mhat(one, x1, x2) == x1);
  for (ElementId a = 0; a < 4; ++a)
    for (ElementId b = 0; b < 4; ++b)
      for (ElementId c = 0; c < 4; ++c) {
        const auto r = d.mhat(fp.embed(fp.x_point(a)), fp.embed(fp.x_point(b)), fp.embed(fp.x_point(c)));
        CHECK(r == fp.embed(fp.x_point(four_point_square()(a, b, c))));
      }
  const auto ball = fp.ball(2);
  for (const auto& u : ball)
    for (const auto& v : ball) {
      CHECK(d.mhat(u, u, v) == u);
      CHECK(d.cap(u, u) == u);
      CHECK(d.cap(u, v) == d.mhat(u, one, v));
      CHECK(d.subset_order(one, v));
    }
}

TEST_CASE("example square cell") {
  const auto d = example_square();
  const auto& fp = d.words();
  const auto v = fp.parse("x1^-2 x2 x3^2 x2");
  const auto cell = d.deformed_cell(Word(), v);
  CHECK(render(fp, cell) == std::vector<std::string>{"1", "x1^-1", "x1^-2 x2", "x1^-2 x2 x3", "x1^-2 x2 x3^2",
                                                     "x1^-2 x2 x3^2 x1", "x1^-2 x2 x3^2 x2", "x1^-2 x2 x3^3"});
  for (const auto& z : cell) CHECK(d.mhat(Word(), v, z) == z);

  // The last piece is the translated square x1^-2 x2 x3^2 [1, x2].
  const auto base = fp.parse("x1^-2 x2 x3^2");
  const auto sq = d.deformed_cell(base, v);
  CHECK(sq.size() == 4);
  CHECK(sq == d.deformed_cell(base, fp.mul(base, fp.parse("x2"))));

  const auto u = fp.parse("x3 x1");
  const auto far = d.deformed_cell(u, fp.mul(u, v));
  std::vector<Word> moved;
  for (const auto& z : cell) moved.push_back(fp.mul(u, z));
  std::sort(moved.begin(), moved.end());
  CHECK(far == moved);
  CHECK(d.deformed_cell(v, v) == std::vector<Word>{v});
}

TEST_CASE("example square: segments and squares at the root") {
  const auto d = example_square();
  const auto& fp = d.words();
  std::set<std::string> segments, squares;
  for (const auto& w : fp.ball(2)) {
    if (w.is_identity()) continue;
    const auto cell = d.deformed_cell(Word(), w);
    if (cell.size() == 2) segments.insert(fp.to_string(w));
    if (cell.size() == 4) {
      const auto t = TernaryTable::from_function(4, [&](ElementId a, ElementId b, ElementId c) {
        const auto r = d.mhat(cell[a], cell[b], cell[c]);
        return static_cast<ElementId>(std::find(cell.begin(), cell.end(), r) - cell.begin());
      });
      if (!is_locally_linear(MedianTable::unchecked(t))) squares.insert(fp.to_string(w));
    }
  }
  CHECK(segments == std::set<std::string>{"x1", "x1^-1", "x3", "x3^-1", "x1^-1 x2", "x2^-1 x1", "x3^-1 x2",
                                          "x2^-1 x3"});
  CHECK(squares == std::set<std::string>{"x2", "x2^-1", "x1^-1 x3", "x3^-1 x1"});
}

TEST_CASE("configuration") {
  const auto d = config_group();
  const auto& fp = d.words();
  const auto v = fp.parse(config_word());
  CHECK(v.length() == 7);
  const auto c = d.configuration(v);
  std::vector<std::string> ws;
  std::vector<std::size_t> sizes;
  for (const auto& e : c.entries) {
    ws.push_back(fp.to_string(e.w));
    sizes.push_back(e.interval_size);
    CHECK(fp.leq(e.w, v));
  }
  CHECK(ws == std::vector<std::string>{"i^-1", "i^-2", "i^-2 h1 j", "i^-2 h1 j^2", "i^-2 h1 j^3"});
  CHECK(sizes == std::vector<std::size_t>{2, 4, 2, 2, 2});
  CHECK(fp.to_string(c.entries[1].zeta) == "i^-1");
  CHECK(c.entries.back().interval_hi == v);

  const auto single = d.configuration(fp.parse("i"));
  REQUIRE(single.entries.size() == 1);
  CHECK(single.entries[0].w.is_identity());
  CHECK(single.entries[0].zeta.is_identity());
  CHECK(single.entries[0].interval_hi == fp.parse("i"));
  CHECK(single.entries[0].interval_size == 2);
  CHECK_THROWS_AS(d.configuration(Word()), DomainError);
}

TEST_CASE("order criteria agree") {
  for (const auto& m : enumerate_median_ops(FiniteGroup::cyclic(2), 2)) {
    const DeformedGroup d(HMedianSet(FreeProduct(FiniteGroup::cyclic(2), 2), m));
    const auto& fp = d.words();
    const auto ball = fp.ball(3);
    for (const auto& u : ball)
      for (const auto& v : ball) {
        const bool a = d.subset_order(u, v);
        CHECK(a == d.subset_by_prefix(u, v));
        CHECK(a == d.subset_by_cut_prefix(u, v, GuardReading::InverseWord));
        CHECK(a == (d.mhat(Word(), u, v) == u));
      }
  }
}

TEST_CASE("cells match a brute-force scan") {
  const auto d = config_group();
  const auto& fp = d.words();
  const auto ball = fp.ball(2);
  std::map<std::size_t, std::vector<Word>> wide;
  for (const auto& u : ball)
    for (std::size_t k = 0; k < ball.size(); k += 3) {
      const auto& v = ball[k];
      const auto r = fp.left_divide(u, v).length() + 2;
      if (!wide.count(r)) wide[r] = fp.ball(r);
      std::vector<Word> brute;
      for (const auto& z : wide[r]) {
        const auto uz = fp.mul(u, z);
        if (d.mhat(u, v, uz) == uz) brute.push_back(uz);
      }
      std::sort(brute.begin(), brute.end());
      CHECK(brute == d.deformed_cell(u, v));
    }
}

TEST_CASE("verification sweeps") {
  VerifyOptions opts;
  opts.radius = 2;
  for (const auto& m : enumerate_median_ops(FiniteGroup::cyclic(2), 2)) {
    const DeformedGroup d(HMedianSet(FreeProduct(FiniteGroup::cyclic(2), 2), m));
    const auto r = verify_median_group(d, opts);
    CHECK(r.passed());
    REQUIRE(r.find("self-distributivity") != nullptr);
    CHECK(r.find("self-distributivity")->instances > 0);
    if (is_locally_linear(m)) {
      REQUIRE(r.find("cells locally linear") != nullptr);
      CHECK(r.find("cells locally linear")->instances > 0);
    }
  }

  VerifyOptions small;
  small.radius = 1;
  CHECK(verify_median_group(example_square(), small).passed());
  VerifyOptions wider;
  wider.radius = 2;
  wider.check_m3 = false;
  wider.jobs = 2;
  const auto r = verify_median_group(example_square(), wider);
  CHECK(r.passed());
  CHECK(r.find("self-distributivity") == nullptr);
  CHECK(r.find("cells locally linear") == nullptr);

  const auto broken = verify_median_group(example_square(Evaluator::SkipTranslation), wider);
  CHECK_FALSE(broken.passed());
  CHECK(broken.find("left compatibility")->failures > 0);
  CHECK_FALSE(broken.find("left compatibility")->samples.empty());
}

TEST_CASE("distinct tables give distinct evaluators") {
  const auto ops = enumerate_median_ops(FiniteGroup::cyclic(2), 2);
  const FreeProduct fp(FiniteGroup::cyclic(2), 2);
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b) {
      const DeformedGroup da(HMedianSet(fp, ops[a])), db(HMedianSet(fp, ops[b]));
      bool differ = false;
      for (std::size_t x = 0; x < 4 && !differ; ++x)
        for (std::size_t y = 0; y < 4 && !differ; ++y)
          for (std::size_t z = 0; z < 4 && !differ; ++z) {
            const auto ex = fp.embed(fp.x_point(x)), ey = fp.embed(fp.x_point(y)), ez = fp.embed(fp.x_point(z));
            differ = da.mhat(ex, ey, ez) != db.mhat(ex, ey, ez);
          }
      CHECK(differ);
    }
}

TEST_CASE("median operation census") {
  const auto four = enumerate_median_ops(FiniteGroup::trivial(), 4);
  CHECK(four.size() == 19);
  std::set<std::vector<int>> got, want;
  for (const auto& m : four) got.insert(std::vector<int>(m.table().values().begin(), m.table().values().end()));
  for (const auto& t : oracle::all_median_ops(4)) want.insert(t);
  CHECK(got == want);
  std::map<std::string, int> shapes_seen;
  for (const auto& m : four) ++shapes_seen[shape_name(m)];
  CHECK(shapes_seen == std::map<std::string, int>{{"chain", 12}, {"square", 3}, {"star", 4}});

  CHECK(enumerate_median_ops(FiniteGroup::trivial(), 3).size() == 3);
  CHECK(enumerate_median_ops(FiniteGroup::cyclic(2), 2).size() == 7);
  CHECK(enumerate_median_ops(FiniteGroup::cyclic(2), 1).size() == 1);
  CHECK_THROWS_AS(enumerate_median_ops(FiniteGroup::trivial(), 6), GuardExceeded);
  CHECK(four_point_tables().size() == 7);
}

TEST_CASE("median group operation census") {
  const std::vector<std::size_t> counts = {1, 1, 0, 1, 0, 0, 0, 0};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto ops = enumerate_median_group_ops(FiniteGroup::cyclic(n));
    CHECK(ops.size() == counts[n - 1]);
    if (n <= 5) CHECK(ops.size() == oracle::cyclic_median_group_ops(static_cast<int>(n)));
    for (const auto& m : ops) CHECK(check_median_axioms(m.table()).passed());
  }
  const auto z4 = enumerate_median_group_ops(FiniteGroup::cyclic(4));
  REQUIRE(z4.size() == 1);
  CHECK(z4[0] == shapes::square(0, 1, 2, 3));
  CHECK(shape_name(z4[0]) == "square");
  CHECK_THROWS_AS(enumerate_median_group_ops(FiniteGroup::cyclic(9)), GuardExceeded);
}

TEST_CASE("admissible maps") {
  const auto z4 = admissible_maps(FiniteGroup::cyclic(4), {0, 1});
  std::vector<std::vector<std::uint32_t>> admissible;
  for (const auto& a : z4)
    if (a.admissible()) admissible.push_back(a.phi);
  CHECK(admissible == std::vector<std::vector<std::uint32_t>>{z4_admissible_map()});
  CHECK(z4.size() == 4);

  const auto whole = admissible_maps(FiniteGroup::cyclic(4), {0, 1, 2, 3});
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].phi == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(whole[0].ops == std::vector<std::size_t>{0});

  const auto z2 = admissible_maps(FiniteGroup::cyclic(2), {0, 1});
  REQUIRE(z2.size() == 1);
  CHECK(z2[0].admissible());

  CHECK_THROWS_AS(admissible_maps(FiniteGroup::cyclic(4), {1, 3}), DomainError);
  CHECK_THROWS_AS(admissible_maps(FiniteGroup::cyclic(4), {0, 2}), DomainError);
}
