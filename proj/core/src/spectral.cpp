#include "medianforge/spectral.hpp"

#include <algorithm>
#include <bit>

#include "medianforge/errors.hpp"

namespace medianforge {

namespace {

constexpr std::size_t kSpecMaxElements = 20;
constexpr std::size_t kLatticeMaxElements = 12;

std::string mask_text(const ElementSubset& s) {
  std::string out = "{";
  bool first = true;
  for (auto x : s.elements()) {
    out += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::vector<PrimeConvex> spec(const MedianTable& m) {
  const std::size_t n = m.size();
  if (n > kSpecMaxElements) throw GuardExceeded("spec enumeration limited to 20 elements");
  std::vector<std::uint64_t> iv(n * n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) iv[x * n + y] = interval(m, x, y).mask();

  auto convex = [&](std::uint64_t s) {
    for (std::uint64_t a = s; a != 0; a &= a - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(a));
      for (std::uint64_t b = a; b != 0; b &= b - 1) {
        const auto y = static_cast<std::size_t>(std::countr_zero(b));
        if ((iv[x * n + y] & ~s) != 0) return false;
      }
    }
    return true;
  };

  const std::uint64_t full = ElementSubset::all(n).mask();
  std::vector<PrimeConvex> out;
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (convex(s) && convex(full & ~s)) out.emplace_back(n, s);
  }
  return out;
}

SpectralSpace::SpectralSpace(MedianTable m) : m_(std::move(m)), primes_(spec(m_)) {
  complement_index_.resize(primes_.size());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    complement_index_[i] = prime_index(primes_[i].complement());
  }
  full_index_ = prime_index(m_.all());
}

std::size_t SpectralSpace::prime_index(const PrimeConvex& p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || !(*it == p)) throw DomainError("not a prime convex subset: " + mask_text(p));
  return static_cast<std::size_t>(it - primes_.begin());
}

OpenSet SpectralSpace::make(Bitset ext) const {
  OpenSet u;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!ext.test(i)) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < primes_.size() && maximal; ++j) {
      if (j != i && ext.test(j) && primes_[i].is_subset_of(primes_[j])) maximal = false;
    }
    if (maximal) u.generators_.push_back(primes_[i].complement());
  }
  std::sort(u.generators_.begin(), u.generators_.end());
  u.extension_ = std::move(ext);
  return u;
}

OpenSet SpectralSpace::u_set(const ElementSubset& a) const {
  Bitset ext(primes_.size());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if ((primes_[i] & a).empty()) ext.set(i);
  }
  return make(std::move(ext));
}

std::vector<PrimeConvex> SpectralSpace::v_set(const ElementSubset& a) const {
  std::vector<PrimeConvex> out;
  for (const auto& p : primes_) {
    if (a.is_subset_of(p)) out.push_back(p);
  }
  return out;
}

OpenSet SpectralSpace::from_extension(const Bitset& ext) const {
  if (ext.size() != primes_.size()) throw MalformedInput("extension size does not match Spec");
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!ext.test(i)) continue;
    for (std::size_t j = 0; j < primes_.size(); ++j) {
      if (!ext.test(j) && primes_[j].is_subset_of(primes_[i])) {
        throw DomainError("extension is not a down-set of primes");
      }
    }
  }
  return make(ext);
}

OpenSet SpectralSpace::join(const OpenSet& a, const OpenSet& b) const {
  return make(a.extension() | b.extension());
}

OpenSet SpectralSpace::meet(const OpenSet& a, const OpenSet& b) const {
  return make(a.extension() & b.extension());
}

OpenSet SpectralSpace::negate(const OpenSet& u) const {
  if (u.empty() || is_full(u)) throw DomainError("negation is defined on proper opens only");
  Bitset ext(primes_.size());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!u.extension().test(complement_index_[i])) ext.set(i);
  }
  return make(std::move(ext));
}

OpenSet SpectralSpace::median(const OpenSet& a, const OpenSet& b, const OpenSet& c) const {
  return make(Bitset::majority(a.extension(), b.extension(), c.extension()));
}

std::vector<OpenSet> SpectralSpace::lattice() const {
  if (m_.size() > kLatticeMaxElements) throw GuardExceeded("lattice materialization limited to 12 elements");
  const std::size_t k = primes_.size();
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return primes_[a].size() > primes_[b].size();
  });

  std::vector<OpenSet> out;
  Bitset in(k), out_mask(k);
  out_mask.set(full_index_);
  // Decide primes from largest to smallest: taking P takes every prime
  // below it, refusing P refuses every prime above it.
  auto rec = [&](auto&& self, std::size_t pos, Bitset inc, Bitset exc) -> void {
    while (pos < k && (inc.test(order[pos]) || exc.test(order[pos]))) ++pos;
    if (pos == k) {
      if (!inc.none()) out.push_back(make(inc));
      return;
    }
    const std::size_t p = order[pos];
    Bitset inc2 = inc;
    for (std::size_t j = 0; j < k; ++j)
      if (primes_[j].is_subset_of(primes_[p])) inc2.set(j);
    if ((inc2 & exc).none()) self(self, pos + 1, inc2, exc);
    Bitset exc2 = exc;
    for (std::size_t j = 0; j < k; ++j)
      if (primes_[p].is_subset_of(primes_[j])) exc2.set(j);
    if ((inc & exc2).none()) self(self, pos + 1, inc, exc2);
  };
  rec(rec, 0, in, out_mask);
  std::sort(out.begin(), out.end());
  return out;
}

DualityReport duality_check(const MedianTable& m, std::size_t cap) {
  SpectralSpace space(m);
  const std::size_t n = m.size();
  std::vector<ElementSubset> subsets;
  auto gen = [&](auto&& self, ElementId start, ElementSubset cur) -> void {
    if (!cur.empty()) subsets.push_back(cur);
    if (cur.size() == cap) return;
    for (ElementId x = start; x < n; ++x) {
      ElementSubset next = cur;
      next.insert(x);
      self(self, x + 1, next);
    }
  };
  gen(gen, 0, m.none());

  DualityReport report;
  std::vector<ElementSubset> hulls;
  hulls.reserve(subsets.size());
  for (const auto& a : subsets) {
    auto hull = convex_hull(m, a);
    auto inter = m.all();
    for (const auto& p : space.v_set(a)) inter = inter & p;
    if (!(inter == hull)) {
      report.passed = false;
      report.counterexample = "hull of " + mask_text(a) + " is " + mask_text(hull) +
                              " but the primes containing it meet in " + mask_text(inter);
      return report;
    }
    hulls.push_back(hull);
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      ++report.pairs_checked;
      bool separated = false;
      for (const auto& p : space.primes()) {
        if (subsets[i].is_subset_of(p) && (p & subsets[j]).empty()) {
          separated = true;
          break;
        }
      }
      const bool disjoint = (hulls[i] & hulls[j]).empty();
      if (separated != disjoint) {
        report.passed = false;
        report.counterexample = "A=" + mask_text(subsets[i]) + " B=" + mask_text(subsets[j]) +
                                (separated ? " separated by a prime but hulls meet"
                                           : " hulls disjoint but no separating prime");
        return report;
      }
    }
  }
  return report;
}

InvariantOpensReport invariant_opens(const MedianTable& m) {
  SpectralSpace space(m);
  InvariantOpensReport report;
  for (const auto& u : space.lattice()) {
    if (space.negate(u) == u) report.invariant.push_back(u);
  }
  std::vector<OpenSet> points;
  for (ElementId x = 0; x < m.size(); ++x) points.push_back(space.u_point(x));

  for (const auto& u : report.invariant) {
    int found = -1;
    for (ElementId x = 0; x < m.size(); ++x) {
      if (points[x] == u) found = static_cast<int>(x);
    }
    report.point_of.push_back(found);
    if (found < 0 && report.passed) {
      report.passed = false;
      report.counterexample = "invariant open with no matching point";
    }
  }
  if (report.invariant.size() != m.size() && report.passed) {
    report.passed = false;
    report.counterexample = "found " + std::to_string(report.invariant.size()) +
                            " invariant opens for " + std::to_string(m.size()) + " points";
  }
  for (ElementId x = 0; x < m.size() && report.passed; ++x)
    for (ElementId y = 0; y < m.size() && report.passed; ++y)
      for (ElementId z = 0; z < m.size() && report.passed; ++z) {
        if (!(space.median(points[x], points[y], points[z]) == points[m(x, y, z)])) {
          report.passed = false;
          report.counterexample = "lattice median of U(" + std::to_string(x) + "),U(" +
                                  std::to_string(y) + "),U(" + std::to_string(z) +
                                  ") differs from U(m)";
        }
      }
  return report;
}

}  // namespace medianforge
