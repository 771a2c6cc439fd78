#include "medianforge/closure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "medianforge/antichain.hpp"
#include "medianforge/errors.hpp"
#include "medianforge/free_median.hpp"

namespace medianforge {

namespace {

using Term = std::vector<Word>;

std::vector<Term> canonical(std::vector<Term> terms) {
  for (auto& t : terms) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
  }
  return antichain::minimalize(std::move(terms));
}

}  // namespace

bool prime_member(const FreeProduct& fp, const PrimeHandle& handle, const Word& w) {
  return handle.p.contains(static_cast<ElementId>(fp.x_id(fp.phi_product(handle.u, w))));
}

std::vector<PrimeHandle> prime_handles(const DeformedGroup& d, std::size_t radius) {
  const auto primes = spec(d.x().table());
  std::vector<PrimeHandle> out;
  for (const auto& u : d.words().ball(radius))
    for (const auto& p : primes) out.push_back({u, p});
  return out;
}

SExpr::SExpr(std::vector<std::vector<Word>> terms) {
  if (terms.empty()) throw MalformedInput("lattice expression must have at least one member");
  for (const auto& t : terms)
    if (t.empty()) throw MalformedInput("lattice expression members must be nonempty");
  terms_ = canonical(std::move(terms));
}

SExpr closure_join(const SExpr& a, const SExpr& b) {
  return SExpr(SExpr::Canonical{}, antichain::join(a.terms_, b.terms_));
}

SExpr closure_meet(const SExpr& a, const SExpr& b) {
  return SExpr(SExpr::Canonical{}, antichain::meet(a.terms_, b.terms_));
}

SExpr closure_negate(const SExpr& e) {
  auto t = antichain::minimal_transversals_berge(e.terms_, [](const Term& f) {
    std::vector<Term> singles;
    for (const auto& w : f) singles.push_back({w});
    return singles;
  });
  return SExpr(SExpr::Canonical{}, std::move(t));
}

SExpr translate(const FreeProduct& fp, const Word& s, const SExpr& e) {
  std::vector<Term> terms;
  for (const auto& t : e.terms_) {
    Term moved;
    for (const auto& w : t) moved.push_back(fp.mul(s, w));
    terms.push_back(std::move(moved));
  }
  return SExpr(SExpr::Canonical{}, canonical(std::move(terms)));
}

SExpr lattice_median(const SExpr& a, const SExpr& b, const SExpr& c) {
  return SExpr(SExpr::Canonical{}, antichain::median(a.terms_, b.terms_, c.terms_));
}

bool evaluate(const FreeProduct& fp, const PrimeHandle& handle, const SExpr& e) {
  for (const auto& t : e.terms()) {
    const bool misses = std::none_of(t.begin(), t.end(), [&](const Word& w) { return prime_member(fp, handle, w); });
    if (misses) return true;
  }
  return false;
}

Bitset signature(const FreeProduct& fp, const std::vector<PrimeHandle>& handles, const SExpr& e) {
  Bitset b(handles.size());
  for (std::size_t i = 0; i < handles.size(); ++i) b.set(i, evaluate(fp, handles[i], e));
  return b;
}

std::string to_string(const FreeProduct& fp, const SExpr& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.terms().size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (std::size_t j = 0; j < e.terms()[i].size(); ++j) {
      if (j) out += ",";
      out += fp.to_string(e.terms()[i][j]);
    }
    out += "}";
  }
  return out + "}";
}

XHatElement::XHatElement(SExpr e) : e_(std::move(e)) {
  if (!(closure_negate(e_) == e_)) throw DomainError("expression is not fixed by negation");
}

XHatElement closure_median(const XHatElement& x, const XHatElement& y, const XHatElement& z) {
  return XHatElement(lattice_median(x.e_, y.e_, z.e_), XHatElement::Trusted{});
}

XHatElement translate(const FreeProduct& fp, const Word& s, const XHatElement& e) {
  return XHatElement(translate(fp, s, e.e_), XHatElement::Trusted{});
}

RadiusComparison equal_at_radius(const DeformedGroup& d, const SExpr& e, const SExpr& f, std::size_t radius) {
  const auto& fp = d.words();
  RadiusComparison r;
  for (const auto& h : prime_handles(d, radius)) {
    if (evaluate(fp, h, e) != evaluate(fp, h, f)) {
      r.verdict = RadiusVerdict::Distinct;
      r.witness = h;
      return r;
    }
  }
  return r;
}

RtcReport rtc_fragment(const DeformedGroup& d, std::size_t radius, std::size_t max_elements) {
  const auto& fp = d.words();
  RtcReport r;
  r.radius = radius;
  r.eval_radius = radius + 2;
  const auto handles = prime_handles(d, r.eval_radius);
  r.handles = handles.size();
  auto sig = [&](const SExpr& e) { return signature(fp, handles, e); };
  auto sample = [&](std::string s) {
    if (r.samples.size() < 16) r.samples.push_back(std::move(s));
  };

  const auto ball = fp.ball(radius);
  if (ball.size() > max_elements) throw GuardExceeded("closure fragment exceeded its element budget");
  std::vector<XHatElement> elems;
  std::vector<Bitset> sigs;
  std::map<Bitset, std::size_t> index;
  for (const auto& u : ball) {
    auto e = XHatElement::point(u);
    auto s = sig(e.expr());
    if (index.emplace(s, elems.size()).second) {
      elems.push_back(std::move(e));
      sigs.push_back(std::move(s));
    } else {
      ++r.embed_failures;
      sample("ball words share a signature: " + fp.to_string(u));
    }
  }
  r.seeds = elems.size();

  // Evaluation at a handle is a lattice homomorphism, so the signature of a
  // median is the bitwise majority and only new signatures need the
  // syntactic median.
  std::size_t done = 0;
  while (done < elems.size()) {
    const std::size_t end = elems.size();
    for (std::size_t i = 0; i < end; ++i)
      for (std::size_t j = i; j < end; ++j)
        for (std::size_t k = std::max(done, j); k < end; ++k) {
          auto s = Bitset::majority(sigs[i], sigs[j], sigs[k]);
          if (index.count(s)) continue;
          if (elems.size() >= max_elements) throw GuardExceeded("closure fragment exceeded its element budget");
          index.emplace(s, elems.size());
          elems.push_back(closure_median(elems[i], elems[j], elems[k]));
          sigs.push_back(std::move(s));
        }
    done = end;
  }
  r.fragment_size = elems.size();

  // pi by search over point opens, first in the ball, then two further.
  std::map<Bitset, Word> points;
  std::size_t searched = 0;
  auto extend = [&](std::size_t rad) {
    for (const auto& u : fp.ball(rad))
      if (u.length() > searched || points.empty()) points.emplace(sig(SExpr::point(u)), u);
    searched = rad;
  };
  extend(radius);
  std::vector<std::optional<Word>> pi(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto it = points.find(sigs[i]);
    if (it == points.end()) {
      if (searched == radius) {
        ++r.pi_retries;
        extend(radius + 2);
      }
      it = points.find(sigs[i]);
    }
    if (it == points.end()) {
      ++r.pi_failures;
      sample("no word matches " + to_string(fp, elems[i].expr()));
    } else {
      pi[i] = it->second;
    }
    if (i >= r.seeds) ++r.new_elements;
  }

  for (std::size_t i = 0; i < r.seeds && i < ball.size(); ++i) {
    if (!pi[i] || !(*pi[i] == ball[i])) {
      ++r.embed_failures;
      sample("pi does not invert the embedding at " + fp.to_string(ball[i]));
    }
  }
  for (std::size_t i = 0; i < r.seeds && i < ball.size(); ++i) {
    if (!fp.in_x(ball[i]) || !pi[i]) continue;
    if (!(fp.embed(fp.phi(*pi[i])) == ball[i])) {
      ++r.retract_failures;
      sample("p moves " + fp.to_string(ball[i]));
    }
  }

  std::vector<Word> shifts;
  for (const auto& s : fp.ball(1))
    if (!s.is_identity()) shifts.push_back(s);
  const std::size_t free_ball = std::min<std::size_t>(radius, 2);
  std::vector<Word> movers;
  for (const auto& s : fp.ball(free_ball))
    if (!s.is_identity()) movers.push_back(s);

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : shifts) {
      const auto moved = translate(fp, s, elems[i]);
      if (pi[i] && !(sig(moved.expr()) == sig(SExpr::point(fp.mul(s, *pi[i]))))) {
        ++r.equivariance_failures;
        sample("pi is not equivariant at s=" + fp.to_string(s));
      }
      if (s.length() == 1 && s.origin().is_h() && pi[i]) {
        const auto ps = fp.phi(fp.mul(s, *pi[i]));
        if (!(ps == fp.act(s.origin().index, fp.phi(*pi[i])))) {
          ++r.h_equivariance_failures;
          sample("p is not H-equivariant at " + fp.to_string(s));
        }
      }
    }
    for (const auto& s : movers) {
      if (sig(translate(fp, s, elems[i]).expr()) == sigs[i]) {
        ++r.freeness_failures;
        sample(fp.to_string(s) + " fixes " + to_string(fp, elems[i].expr()));
      }
    }
  }

  for (const auto& u : ball)
    for (const auto& v : ball)
      for (const auto& w : ball) {
        ++r.bridge_checked;
        const auto lhs = closure_median(XHatElement::point(u), XHatElement::point(v), XHatElement::point(w));
        if (!(sig(lhs.expr()) == sig(SExpr::point(d.mhat(u, v, w))))) {
          ++r.bridge_failures;
          sample("lattice median differs from mhat at (" + fp.to_string(u) + ", " + fp.to_string(v) + ", " +
                 fp.to_string(w) + ")");
        }
      }

  for (std::size_t i = 0; i < elems.size(); ++i) r.elements.push_back({elems[i], pi[i], i < r.seeds});
  return r;
}

bool TcReport::passed() const {
  if (!cross_checked) return true;
  for (const auto& l : levels)
    if (l.name == "X1") return l.size == oracle_count && l.size == majority_count;
  return false;
}

namespace {

constexpr std::size_t kTcMaxBase = 5;

std::size_t free_group_ball(std::size_t rank, std::size_t r) {
  if (rank == 0) return 1;
  std::size_t total = 1, layer = 2 * rank;
  for (std::size_t k = 1; k <= r; ++k) {
    total += layer;
    layer *= 2 * rank - 1;
  }
  return total;
}

}  // namespace

TcReport tc_iterate(const HMedianSet& seed, std::size_t depth, std::size_t radius) {
  if (depth > 2) throw GuardExceeded("transitive closure depth limited to 2");
  if (seed.group().order() != 1) throw DomainError("transitive closure driver requires trivial H");
  TcReport r;
  r.levels.push_back({"H0", 1, false, "trivial group"});
  r.levels.push_back({"X0", seed.words().x_size(), false, "seed median set"});
  if (depth == 0) return r;

  const auto& fp = seed.words();
  const auto ball = fp.ball(radius);
  r.levels.push_back({"H1", ball.size(), radius > 0, "words of length <= " + std::to_string(radius)});
  if (ball.size() > kTcMaxBase + 1) throw GuardExceeded("median fragment limited to 6 generators");

  std::vector<XHatElement> elems;
  std::map<XHatElement, std::size_t> index;
  for (const auto& u : ball) {
    index.emplace(XHatElement::point(u), elems.size());
    elems.push_back(XHatElement::point(u));
  }
  std::size_t done = 0;
  while (done < elems.size()) {
    const std::size_t end = elems.size();
    for (std::size_t i = 0; i < end; ++i)
      for (std::size_t j = i; j < end; ++j)
        for (std::size_t k = std::max(done, j); k < end; ++k) {
          auto m = closure_median(elems[i], elems[j], elems[k]);
          if (index.emplace(m, elems.size()).second) elems.push_back(std::move(m));
        }
    done = end;
  }
  r.levels.push_back({"X1", elems.size(), radius > 0, "median closure of the H1 point opens"});
  if (ball.size() <= kTcMaxBase) {
    r.cross_checked = true;
    r.oracle_count = fms_enumerate(ball.size()).size();
    r.majority_count = fms_majority_closure(ball.size()).size();
  }
  if (depth == 1) return r;

  // Orbits of the fragment under the generators, joined only when the
  // translate stays in the fragment.
  std::vector<std::size_t> parent(elems.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& s : fp.ball(1)) {
    if (s.is_identity()) continue;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      auto it = index.find(translate(fp, s, elems[i]));
      if (it != index.end()) parent[find(i)] = find(it->second);
    }
  }
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (find(i) == i) ++orbits;
  r.levels.push_back({"I1", orbits, false, "orbits visible in the X1 fragment (upper bound)"});
  // H2 = H1 * F(I1 - 1) is free of rank |I1| when H1 is infinite cyclic.
  const std::size_t rank = fp.indices() - 1 + (orbits > 0 ? orbits - 1 : 0);
  r.levels.push_back({"H2", free_group_ball(rank, radius), true,
                      "ball of radius " + std::to_string(radius) + " in a free group of rank " +
                          std::to_string(rank)});
  return r;
}

}  // namespace medianforge
