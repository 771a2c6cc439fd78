#include <doctest.h>

#include <random>
#include <set>

#include "medianforge/errors.hpp"
#include "medianforge/group_words.hpp"
#include "oracles.hpp"

using namespace medianforge;

namespace {

oracle::Word to_oracle(const Word& w) {
  oracle::Word out;
  for (const auto& l : w.letters()) {
    if (l.is_h()) {
      out.push_back({0, l.index});
    } else {
      out.push_back({l.index - 1, l.kind == LetterKind::Gen ? 1 : -1});
    }
  }
  return out;
}

Word random_word(const FreeProduct& fp, std::mt19937& rng, std::size_t len) {
  std::vector<Letter> ls;
  std::uniform_int_distribution<std::uint32_t> pick(0, 2 * static_cast<std::uint32_t>(fp.indices()));
  for (std::size_t k = 0; k < len; ++k) {
    const auto r = pick(rng);
    if (r < 2 || fp.indices() == 1) {
      const auto e = 1 + r % std::max<std::uint32_t>(1, static_cast<std::uint32_t>(fp.group().order() - 1));
      if (fp.group().order() > 1) ls.push_back(Letter::h(e));
    } else {
      const auto i = 2 + (r - 2) % static_cast<std::uint32_t>(fp.indices() - 1);
      ls.push_back(r % 2 ? Letter::gen(i) : Letter::gen_inv(i));
    }
  }
  return fp.normalize(ls);
}

}  // namespace

TEST_CASE("finite groups") {
  const auto z4 = FiniteGroup::cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.element_order(2) == 2);
  CHECK(z4.pow(1, -1) == 3);
  CHECK(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)).element_order(3) == 2);
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), MalformedInput);
  CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 1}}), MalformedInput);
  CHECK_THROWS_AS(FiniteGroup({}), MalformedInput);
}

TEST_CASE("msfg and fixed points") {
  CHECK(msfg_check(FiniteGroup::cyclic(4)).ok);
  CHECK(msfg_check(FiniteGroup::trivial()).ok);
  const auto z3 = msfg_check(FiniteGroup::cyclic(3));
  CHECK_FALSE(z3.ok);
  CHECK(z3.prime == 3);
  REQUIRE(z3.witness.has_value());
  CHECK(*z3.witness != 0);
  CHECK_FALSE(msfg_check(FiniteGroup::cyclic(6)).ok);

  const auto fix = fms_fixed_point(FiniteGroup::cyclic(3));
  REQUIRE(fix.has_value());
  CHECK(fix->g != 0);
  CHECK(to_string(fix->x) == "{{a,b},{a,c},{b,c}}");
  CHECK_FALSE(fms_fixed_point(FiniteGroup::cyclic(2)).has_value());
  CHECK_FALSE(fms_fixed_point(FiniteGroup::cyclic(4)).has_value());
  CHECK_FALSE(fms_fixed_point(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))).has_value());
  CHECK_THROWS_AS(fms_fixed_point(FiniteGroup::cyclic(5)), GuardExceeded);
}

TEST_CASE("normal forms") {
  const FreeProduct fp(FiniteGroup::cyclic(3), 3, {"i", "j"});
  const auto w = fp.normalize({Letter::h(1), Letter::gen(2), Letter::gen_inv(2), Letter::h(1)});
  CHECK(w == fp.h_word(2));
  CHECK(fp.normalize({Letter::h(1), Letter::gen(2), Letter::gen_inv(2), Letter::h(2)}).is_identity());
  CHECK(fp.normalize({}).length() == 0);
  CHECK(fp.parse("i^-2 h1 j^3 h2").length() == 7);
  CHECK(fp.to_string(fp.parse("i^-2 h1 j^3 h2")) == "i^-2 h1 j^3 h2");
  CHECK(fp.mul(fp.gen_word(2), fp.gen_word(2)).length() == 2);
  CHECK(fp.parse("1").is_identity());
  CHECK(fp.parse("h1^2") == fp.h_word(2));
  CHECK_THROWS_AS(fp.parse("k"), MalformedInput);
  CHECK_THROWS_AS(fp.parse("h3"), MalformedInput);
  CHECK_THROWS_AS(fp.parse("i^x"), MalformedInput);
  CHECK_THROWS_AS(fp.normalize({Letter::gen(4)}), MalformedInput);

  std::mt19937 rng(3);
  for (int k = 0; k < 300; ++k) {
    const auto u = random_word(fp, rng, 6), v = random_word(fp, rng, 6), t = random_word(fp, rng, 4);
    CHECK(fp.mul(u, fp.inv(u)).is_identity());
    CHECK(fp.mul(fp.mul(u, v), t) == fp.mul(u, fp.mul(v, t)));
    CHECK(fp.inv(fp.mul(u, v)) == fp.mul(fp.inv(v), fp.inv(u)));
    oracle::Word raw = to_oracle(u);
    const auto vv = to_oracle(v);
    raw.insert(raw.end(), vv.begin(), vv.end());
    CHECK(oracle::reduce(raw, 3) == to_oracle(fp.mul(u, v)));
    CHECK(fp.parse(fp.to_string(u)) == u);
  }
}

TEST_CASE("tree order") {
  const FreeProduct fp(FiniteGroup::cyclic(2), 3);
  const auto ball = fp.ball(3);
  for (const auto& w : ball) CHECK(fp.leq(Word(), w));
  for (const auto& u : ball)
    for (const auto& v : ball) {
      const bool prefix = u.length() <= v.length() && v.prefix(u.length()) == u;
      CHECK(fp.leq(u, v) == prefix);
      CHECK(fp.leq(u, v) == (v.length() == u.length() + fp.left_divide(u, v).length()));
      const auto m = fp.meet(u, v);
      CHECK(fp.leq(m, u));
      CHECK(fp.leq(m, v));
      CHECK(fp.tree_y(u, u, v) == u);
    }
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  for (int k = 0; k < 2000; ++k) {
    const auto& u = ball[pick(rng)];
    const auto& v = ball[pick(rng)];
    const auto& w = ball[pick(rng)];
    const auto t = fp.tree_y(u, v, w);
    CHECK(fp.tree_y(fp.left_divide(t, u), fp.left_divide(t, v), fp.left_divide(t, w)).is_identity());
    CHECK(fp.tree_y(u, v, w) == fp.tree_y(w, u, v));
  }
}

TEST_CASE("phi and theta") {
  const FreeProduct fp(FiniteGroup::cyclic(2), 3, {"i", "j"});
  CHECK(fp.phi(fp.parse("h1 i j^-1")) == XPoint{1, 2});
  CHECK(fp.phi(fp.parse("i h1")) == XPoint{0, 2});
  CHECK(fp.phi(fp.parse("j^-1 h1 i^2")) == XPoint{0, 1});
  CHECK(fp.phi(fp.parse("h1 i^-1")) == XPoint{1, 1});
  CHECK(fp.phi(Word()) == XPoint{0, 1});
  CHECK(fp.theta_hat(fp.parse("i h1")) == 0);
  CHECK(fp.theta_hat(fp.parse("h1 j")) == 1);

  for (std::size_t id = 0; id < fp.x_size(); ++id) {
    const auto x = fp.x_point(id);
    CHECK(fp.x_id(x) == id);
    CHECK(fp.phi(fp.embed(x)) == x);
    CHECK(fp.in_x(fp.embed(x)));
  }
  const auto ball = fp.ball(3);
  for (const auto& w : ball) {
    const auto hw = fp.mul(fp.h_word(1), w);
    CHECK(fp.phi(hw) == fp.act(1, fp.phi(w)));
    CHECK(fp.theta_hat(hw) == fp.group().mul(1, fp.theta_hat(w)));
    CHECK(fp.leq(fp.embed(fp.phi(w)), w));
    for (const auto& v : ball) {
      if (fp.leq(v, w) && fp.in_x(v)) CHECK(fp.leq(v, fp.embed(fp.phi(w))));
    }
  }
  for (const auto& u : ball)
    for (std::size_t k = 0; k < ball.size(); k += 5) CHECK(fp.phi_product(u, ball[k]) == fp.phi(fp.mul(u, ball[k])));
}

TEST_CASE("factorization") {
  const FreeProduct fp(FiniteGroup::cyclic(2), 2);
  const auto ball = fp.ball(3);
  for (const auto& u : ball)
    for (const auto& v : ball) {
      const auto f = fp.factorize(u, v);
      const auto uv = fp.mul(u, v);
      CHECK(fp.mul(fp.mul(f.u2, fp.h_word(f.h)), f.v2) == uv);
      CHECK(uv.length() == f.u2.length() + (f.h != 0 ? 1 : 0) + f.v2.length());
    }
}

TEST_CASE("balls") {
  const FreeProduct fp(FiniteGroup::cyclic(2), 2, {"i"});
  CHECK(fp.ball(0).size() == 1);
  CHECK(fp.ball(1).size() == 4);
  // Frozen from the breadth-first oracle.
  CHECK(fp.ball(2).size() == 10);
  CHECK(fp.ball(3).size() == 22);
  for (std::size_t r = 0; r <= 6; ++r) {
    const auto b = fp.ball(r);
    CHECK(b.size() == fp.ball_count(r));
    CHECK(b.size() == oracle::ball(2, 1, r).size());
    std::set<oracle::Word> got;
    for (const auto& w : b) got.insert(to_oracle(w));
    CHECK(got == oracle::ball(2, 1, r));
    CHECK(std::is_sorted(b.begin(), b.end()));
  }
  const FreeProduct wide(FiniteGroup::cyclic(3), 3);
  for (std::size_t r = 0; r <= 4; ++r) CHECK(wide.ball(r).size() == oracle::ball(3, 2, r).size());
  CHECK_THROWS_AS(wide.ball(30, 1000), GuardExceeded);
  const FreeProduct trivial(FiniteGroup::trivial(), 1);
  CHECK(trivial.ball(5).size() == 1);
}
