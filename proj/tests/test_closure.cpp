#include <doctest.h>

#include <random>

#include "medianforge/closure.hpp"
#include "medianforge/errors.hpp"
#include "medianforge/fixtures.hpp"

using namespace medianforge;

namespace {

DeformedGroup z2_square_group() {
  return DeformedGroup(HMedianSet(FreeProduct(FiniteGroup::cyclic(2), 2), z2_two_orbit_square()));
}

DeformedGroup segment_group() {
  return DeformedGroup(HMedianSet(FreeProduct(FiniteGroup::trivial(), 2), shapes::chain(2)));
}

}  // namespace

TEST_CASE("prime handles") {
  const auto d = z2_square_group();
  const auto& fp = d.words();
  const auto ps = spec(d.x().table());
  for (const auto& p : ps)
    for (std::size_t id = 0; id < fp.x_size(); ++id) {
      const auto x = fp.embed(fp.x_point(id));
      CHECK(prime_member(fp, {Word(), p}, x) == p.contains(static_cast<ElementId>(id)));
    }
  const auto handles = prime_handles(d, 1);
  CHECK(handles.size() == fp.ball(1).size() * ps.size());
  const auto ball = fp.ball(2);
  for (const auto& h : handles)
    for (const auto& w : ball) {
      CHECK(prime_member(fp, {h.u, h.p.complement()}, w) != prime_member(fp, h, w));
      for (std::size_t k = 0; k < ball.size(); k += 4) {
        const auto& s = ball[k];
        CHECK(prime_member(fp, h, fp.mul(s, w)) == prime_member(fp, {fp.mul(h.u, s), h.p}, w));
      }
    }
}

TEST_CASE("expression calculus") {
  const FreeProduct fp(FiniteGroup::cyclic(2), 2);
  const auto u = fp.parse("x1"), v = fp.parse("h1"), w = fp.parse("x1^-1");
  const auto pu = SExpr::point(u), pv = SExpr::point(v), pw = SExpr::point(w);
  CHECK(closure_negate(pu) == pu);
  CHECK(closure_meet(pu, pv) == SExpr({{u, v}}));
  CHECK(closure_negate(closure_join(pu, pv)) == SExpr({{u, v}}));
  CHECK(closure_negate(closure_negate(closure_join(pu, pv))) == closure_join(pu, pv));
  CHECK(closure_join(pu, closure_meet(pu, pv)) == pu);
  CHECK(closure_negate(closure_meet(closure_join(pu, pv), pw)) ==
        closure_join(closure_negate(closure_join(pu, pv)), closure_negate(pw)));
  CHECK(SExpr({{u, v}, {v, u, w}, {v}}) == SExpr({{v}}));
  CHECK_THROWS_AS(SExpr(std::vector<std::vector<Word>>{}), MalformedInput);
  CHECK_THROWS_AS(SExpr(std::vector<std::vector<Word>>{std::vector<Word>{}}), MalformedInput);

  const auto tri = XHatElement(lattice_median(pu, pv, pw));
  CHECK(tri.expr() == SExpr({{u, v}, {u, w}, {v, w}}));
  CHECK_THROWS_AS(XHatElement(closure_join(pu, pv)), DomainError);
  const auto x = XHatElement::point(u), y = XHatElement::point(v);
  CHECK(closure_median(x, x, y) == x);
  CHECK(closure_median(x, y, XHatElement::point(w)) == tri);
  for (const auto& s : fp.ball(2)) {
    CHECK(translate(fp, s, closure_median(x, y, tri)) ==
          closure_median(translate(fp, s, x), translate(fp, s, y), translate(fp, s, tri)));
    CHECK(translate(fp, s, closure_negate(closure_join(pu, pw))) ==
          closure_negate(translate(fp, s, closure_join(pu, pw))));
  }
  CHECK(to_string(fp, tri.expr()).find("x1^-1") != std::string::npos);
}

TEST_CASE("point opens are closed under the lattice median") {
  const auto d = z2_square_group();
  const auto& fp = d.words();
  const auto handles = prime_handles(d, 3);
  const auto ball = fp.ball(1);
  for (const auto& a : ball)
    for (const auto& b : ball)
      for (const auto& c : ball) {
        const auto lhs = closure_median(XHatElement::point(a), XHatElement::point(b), XHatElement::point(c));
        CHECK(signature(fp, handles, lhs.expr()) == signature(fp, handles, SExpr::point(d.mhat(a, b, c))));
      }
}

TEST_CASE("radius comparison") {
  const auto d = z2_square_group();
  const auto& fp = d.words();
  const auto ball = fp.ball(2);
  for (const auto& u : ball) {
    CHECK(equal_at_radius(d, SExpr::point(u), SExpr::point(u), 3).verdict == RadiusVerdict::Indistinguishable);
    for (const auto& v : ball) {
      if (u == v) continue;
      const auto r = u.length() + v.length();
      const auto cmp = equal_at_radius(d, SExpr::point(u), SExpr::point(v), r);
      CHECK(cmp.verdict == RadiusVerdict::Distinct);
      REQUIRE(cmp.witness.has_value());
      CHECK(evaluate(fp, *cmp.witness, SExpr::point(u)) != evaluate(fp, *cmp.witness, SExpr::point(v)));
      CHECK(equal_at_radius(d, SExpr::point(u), SExpr::point(v), r + 1).verdict == RadiusVerdict::Distinct);
    }
  }
}

TEST_CASE("rtc fragments") {
  const auto seg = rtc_fragment(segment_group(), 2);
  CHECK(seg.passed());
  CHECK(seg.radius == 2);
  CHECK(seg.eval_radius == 4);
  CHECK(seg.seeds == 5);
  CHECK(seg.fragment_size == 5);
  CHECK(seg.new_elements == 0);
  for (const auto& e : seg.elements) CHECK(e.pi.has_value());

  const auto one = rtc_fragment(segment_group(), 1);
  CHECK(one.passed());
  CHECK(one.seeds == 3);

  const auto sq = rtc_fragment(z2_square_group(), 1);
  CHECK(sq.passed());
  CHECK(sq.seeds == 4);
  CHECK(sq.fragment_size >= sq.seeds);
  CHECK(sq.bridge_checked > 0);

  CHECK_THROWS_AS(rtc_fragment(z2_square_group(), 2, 3), GuardExceeded);
}

TEST_CASE("transitive closure growth") {
  const HMedianSet seed(FreeProduct(FiniteGroup::trivial(), 2), shapes::chain(2));
  const auto zero = tc_iterate(seed, 0, 2);
  REQUIRE(zero.levels.size() == 2);
  CHECK(zero.levels[1].size == 2);
  CHECK(zero.passed());

  const auto one = tc_iterate(seed, 1, 2);
  REQUIRE(one.levels.size() == 4);
  CHECK(one.levels[2].name == "H1");
  CHECK(one.levels[2].size == 5);
  CHECK(one.levels[3].size == 81);
  CHECK(one.cross_checked);
  CHECK(one.oracle_count == 81);
  CHECK(one.majority_count == 81);
  CHECK(one.passed());

  const auto small = tc_iterate(seed, 1, 1);
  CHECK(small.levels[3].size == 4);
  CHECK(small.levels[3].size <= one.levels[3].size);

  const auto two = tc_iterate(seed, 2, 2);
  REQUIRE(two.levels.size() == 6);
  CHECK(two.levels[4].name == "I1");
  CHECK(two.levels[4].size == 69);
  CHECK(two.levels[5].size == 19045);
  CHECK(two.levels[5].lower_bound);

  CHECK_THROWS_AS(tc_iterate(seed, 3, 1), GuardExceeded);
  CHECK_THROWS_AS(tc_iterate(HMedianSet(FreeProduct(FiniteGroup::cyclic(2), 1), shapes::chain(2)), 1, 1),
                  DomainError);
}
