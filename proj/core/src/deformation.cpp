#include "medianforge/deformation.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "medianforge/errors.hpp"

namespace medianforge {

namespace {

constexpr std::size_t kMaxOpsElements = 5;
constexpr std::size_t kMaxGroupOpsOrder = 8;

ElementId act_id(const FiniteGroup& h, ElementId x, std::uint32_t g) {
  const auto n = static_cast<ElementId>(h.order());
  return (x / n) * n + h.mul(g, x % n);
}

// Runs body(begin, end, slot) over [0, n) split into at most `jobs`
// contiguous chunks; slot indexes per-thread accumulators.
template <class Body>
void parallel_chunks(std::size_t n, std::size_t jobs, Body&& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    body(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  const std::size_t chunk = (n + jobs - 1) / jobs;
  for (std::size_t j = 0; j < jobs; ++j) {
    const std::size_t b = j * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&body, b, e, j] { body(b, e, j); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

CompatReport check_compat(const FiniteGroup& h, std::size_t indices, const TernaryTable& m) {
  CompatReport r;
  if (m.size() != h.order() * indices) throw MalformedInput("median table size must be |H| * |I|");
  r.axioms = check_median_axioms(m);
  const auto n = static_cast<ElementId>(m.size());
  for (std::uint32_t g = 1; g < h.order(); ++g)
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y)
        for (ElementId z = 0; z < n; ++z) {
          if (m(act_id(h, x, g), act_id(h, y, g), act_id(h, z, g)) != act_id(h, m(x, y, z), g)) {
            if (r.violations.size() < 16) r.violations.push_back({g, x, y, z});
          }
        }
  if (r.axioms.passed()) r.locally_linear = is_locally_linear(MedianTable::unchecked(m));
  return r;
}

HMedianSet::HMedianSet(FreeProduct words, MedianTable m) : words_(std::move(words)), m_(std::move(m)) {
  const auto report = check_compat(words_.group(), words_.indices(), m_.table());
  if (!report.axioms.passed()) throw DomainError("table on X is not a median operation");
  if (!report.violations.empty()) {
    const auto& v = report.violations.front();
    throw DomainError("median table is not compatible with H: h=" + std::to_string(v.h) + " at (" +
                      std::to_string(v.x) + "," + std::to_string(v.y) + "," + std::to_string(v.z) + ")");
  }
}

XPoint HMedianSet::median(const XPoint& a, const XPoint& b, const XPoint& c) const {
  return words_.x_point(m_(static_cast<ElementId>(words_.x_id(a)), static_cast<ElementId>(words_.x_id(b)),
                           static_cast<ElementId>(words_.x_id(c))));
}

std::vector<XPoint> HMedianSet::interval(const XPoint& a, const XPoint& b) const {
  std::vector<XPoint> out;
  const auto cell = medianforge::interval(m_, static_cast<ElementId>(words_.x_id(a)),
                                          static_cast<ElementId>(words_.x_id(b)));
  for (auto id : cell.elements()) out.push_back(words_.x_point(id));
  return out;
}

bool HMedianSet::in_interval(const XPoint& a, const XPoint& b, const XPoint& z) const {
  const auto zi = static_cast<ElementId>(words_.x_id(z));
  return m_(static_cast<ElementId>(words_.x_id(a)), static_cast<ElementId>(words_.x_id(b)), zi) == zi;
}

DeformedGroup::DeformedGroup(HMedianSet x, Evaluator eval) : x_(std::move(x)), eval_(eval) {}

Word DeformedGroup::embed_median(const Word& t, const Word& u, const Word& v, const Word& w) const {
  const auto& fp = words();
  const Word ti = fp.inv(t);
  const XPoint r = x_.median(fp.phi_product(ti, u), fp.phi_product(ti, v), fp.phi_product(ti, w));
  return fp.mul(t, fp.embed(r));
}

Word DeformedGroup::mhat(const Word& u, const Word& v, const Word& w) const {
  if (eval_ == Evaluator::SkipTranslation) return embed_median(Word{}, u, v, w);
  return embed_median(words().tree_y(u, v, w), u, v, w);
}

Word DeformedGroup::cap(const Word& u, const Word& v) const {
  const auto& fp = words();
  const Word a = fp.meet(u, v);
  const Word ai = fp.inv(a);
  const XPoint r = x_.median(fp.phi_product(ai, u), fp.phi(ai), fp.phi_product(ai, v));
  return fp.mul(a, fp.embed(r));
}

bool DeformedGroup::subset_order(const Word& u, const Word& v) const {
  const auto& fp = words();
  const Word ai = fp.inv(fp.meet(u, v));
  const Word b = fp.mul(ai, u);
  if (!fp.in_x(b)) return false;
  return x_.in_interval(fp.phi(ai), fp.phi_product(ai, v), fp.phi(b));
}

bool DeformedGroup::subset_by_prefix(const Word& u, const Word& v) const {
  const auto& fp = words();
  for (std::size_t len = 0; len <= v.length(); ++len) {
    const Word wi = fp.inv(v.prefix(len));
    const Word b = fp.mul(wi, u);
    if (fp.in_x(b) && x_.in_interval(fp.phi(wi), fp.phi_product(wi, v), fp.phi(b))) return true;
  }
  return false;
}

bool DeformedGroup::subset_by_cut_prefix(const Word& u, const Word& v, GuardReading reading) const {
  if (u.is_identity() && v.is_identity()) return true;
  const auto& fp = words();
  const XPoint one{0, 1};
  for (std::size_t len = 0; len <= v.length(); ++len) {
    const Word w = v.prefix(len);
    const Word wi = fp.inv(w);
    const XPoint pwi = fp.phi(wi);
    if (pwi.h != 0) continue;
    const XPoint pwv = fp.phi_product(wi, v);
    const bool premise = reading == GuardReading::InverseWord ? (pwi == one) : (fp.phi(w) == one);
    if (premise && pwv == one) continue;
    const Word b = fp.mul(wi, u);
    if (fp.in_x(b) && x_.in_interval(pwi, pwv, fp.phi(b))) return true;
  }
  return false;
}

Configuration DeformedGroup::configuration(const Word& v) const {
  if (v.is_identity()) throw DomainError("configuration is defined for v != 1");
  const auto& fp = words();
  const XPoint one{0, 1};
  Configuration c;
  c.v = v;
  for (std::size_t len = 0; len <= v.length(); ++len) {
    const Word w = v.prefix(len);
    const Word wi = fp.inv(w);
    const XPoint pwi = fp.phi(wi);
    if (pwi.h != 0) continue;
    if (pwi == one && fp.phi_product(wi, v) == one) continue;
    ConfigurationEntry e;
    e.w = w;
    e.zeta = fp.mul(w, fp.embed(pwi));
    c.entries.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    auto& e = c.entries[i];
    e.interval_lo = e.zeta;
    e.interval_hi = i + 1 < c.entries.size() ? c.entries[i + 1].zeta : v;
    const Word a = fp.meet(e.interval_lo, e.interval_hi);
    e.interval_size = (e.interval_lo.length() - a.length()) + (e.interval_hi.length() - a.length()) + 1;
  }
  return c;
}

std::vector<Word> DeformedGroup::deformed_cell(const Word& u, const Word& v) const {
  if (u == v) return {u};
  const auto& fp = words();
  const Word w = fp.left_divide(u, v);
  const auto conf = configuration(w);
  std::vector<Word> out;
  for (const auto& e : conf.entries) {
    const Word wi = fp.inv(e.w);
    for (const auto& x : x_.interval(fp.phi(wi), fp.phi_product(wi, w))) {
      out.push_back(fp.mul(u, fp.mul(e.w, fp.embed(x))));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.failures == 0; });
}

const VerifyReport::Check* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

enum CheckId : std::size_t {
  kSymmetry,
  kAbsorption,
  kSelfDistributivity,
  kRestriction,
  kCompatibility,
  kFolding,
  kFoldingImage,
  kMeetSemilattice,
  kMeetRoot,
  kMeetReversal,
  kMeetTranslate,
  kCapFormula,
  kOrderAgreement,
  kConfigurationChain,
  kCellBruteForce,
  kCellLocallyLinear,
  kCheckCount
};

const std::array<const char*, kCheckCount> kCheckNames = {
    "symmetry",
    "absorption",
    "self-distributivity",
    "restriction to X",
    "left compatibility",
    "phi folding",
    "phi image in X",
    "meet semilattice",
    "root is least",
    "order reversal",
    "translated meet",
    "meet closed form",
    "order criteria agree",
    "configuration chain",
    "cell matches brute force",
    "cells locally linear",
};

struct Acc {
  std::array<VerifyReport::Check, kCheckCount> checks;
  std::size_t cap = 16;

  void hit(CheckId id, bool ok, const std::function<std::string()>& what) {
    auto& c = checks[id];
    ++c.instances;
    if (!ok) {
      ++c.failures;
      if (c.samples.size() < cap) c.samples.push_back(what());
    }
  }
};

}  // namespace

VerifyReport verify_median_group(const DeformedGroup& d, const VerifyOptions& opts) {
  const auto& fp = d.words();
  const auto ball = fp.ball(opts.radius);
  const std::size_t n = ball.size();
  auto str = [&](const Word& w) { return fp.to_string(w); };
  auto tuple = [&](std::initializer_list<const Word*> ws) {
    std::string s = "(";
    bool first = true;
    for (auto* w : ws) {
      s += (first ? "" : ", ") + str(*w);
      first = false;
    }
    return s + ")";
  };

  // Triple medians inside the ball, reused by the nested sweeps.
  std::vector<Word> med(n * n * n);
  parallel_chunks(n, opts.jobs, [&](std::size_t b, std::size_t e, std::size_t) {
    for (std::size_t i = b; i < e; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) med[(i * n + j) * n + k] = d.mhat(ball[i], ball[j], ball[k]);
  });
  auto M = [&](std::size_t i, std::size_t j, std::size_t k) -> const Word& { return med[(i * n + j) * n + k]; };

  std::vector<Acc> accs(std::max<std::size_t>(1, std::min(opts.jobs, n)));
  for (auto& a : accs) a.cap = opts.max_violations;
  for (auto& a : accs)
    for (std::size_t c = 0; c < kCheckCount; ++c) a.checks[c].name = kCheckNames[c];

  const bool locally_linear = is_locally_linear(d.x().table());
  const Word one;

  parallel_chunks(n, opts.jobs, [&](std::size_t b, std::size_t e, std::size_t slot) {
    Acc& acc = accs[slot];
    for (std::size_t i = b; i < e; ++i) {
      const Word& x = ball[i];
      const Word px = fp.embed(fp.phi(x));
      for (std::size_t j = 0; j < n; ++j) {
        const Word& y = ball[j];
        acc.hit(kAbsorption, d.mhat(x, y, x) == x, [&] { return tuple({&x, &y, &x}); });
        for (std::size_t k = 0; k < n; ++k) {
          const Word& z = ball[k];
          const Word& r = M(i, j, k);
          acc.hit(kSymmetry, r == M(j, i, k) && r == M(i, k, j), [&] { return tuple({&x, &y, &z}); });
          if (fp.in_x(x) && fp.in_x(y) && fp.in_x(z)) {
            const Word expect = fp.embed(d.x().median(fp.phi(x), fp.phi(y), fp.phi(z)));
            acc.hit(kRestriction, r == expect, [&] { return tuple({&x, &y, &z}); });
          }
          const Word pz = fp.embed(fp.phi(z));
          acc.hit(kFolding, fp.embed(fp.phi(r)) == d.mhat(px, y, pz), [&] { return tuple({&x, &y, &z}); });
          if (opts.check_m3) {
            for (std::size_t p = 0; p < n; ++p)
              for (std::size_t q = 0; q < n; ++q) {
                const Word lhs = d.mhat(r, ball[p], ball[q]);
                const Word rhs = d.mhat(M(i, p, q), M(j, p, q), z);
                acc.hit(kSelfDistributivity, lhs == rhs,
                        [&] { return tuple({&x, &y, &z, &ball[p], &ball[q]}); });
              }
          }
          for (std::size_t s = 0; s < n; ++s) {
            const Word& t = ball[s];
            acc.hit(kCompatibility, fp.mul(t, r) == d.mhat(fp.mul(t, x), fp.mul(t, y), fp.mul(t, z)),
                    [&] { return "s=" + str(t) + " " + tuple({&x, &y, &z}); });
          }
        }
      }
      acc.hit(kFoldingImage, fp.in_x(px) && fp.embed(fp.phi(px)) == px, [&] { return str(x); });
    }
  });

  // Meet conditions and order criteria on pairs.
  std::vector<Word> caps(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) caps[i * n + j] = d.mhat(ball[i], one, ball[j]);
  auto sub = [&](const Word& a, const Word& b) { return d.mhat(a, one, b) == a; };

  parallel_chunks(n, opts.jobs, [&](std::size_t b, std::size_t e, std::size_t slot) {
    Acc& acc = accs[slot];
    for (std::size_t i = b; i < e; ++i) {
      const Word& x = ball[i];
      acc.hit(kMeetRoot, d.mhat(one, one, x) == one, [&] { return str(x); });
      for (std::size_t j = 0; j < n; ++j) {
        const Word& y = ball[j];
        const Word& c = caps[i * n + j];
        acc.hit(kMeetSemilattice, c == caps[j * n + i] && caps[i * n + i] == x,
                [&] { return tuple({&x, &y}); });
        acc.hit(kCapFormula, d.cap(x, y) == c, [&] { return tuple({&x, &y}); });
        acc.hit(kMeetTranslate, sub(fp.left_divide(x, c), fp.left_divide(x, y)), [&] { return tuple({&x, &y}); });
        const bool by_meet = c == x;
        const bool a = d.subset_order(x, y);
        const bool p = d.subset_by_prefix(x, y);
        const bool q = d.subset_by_cut_prefix(x, y, GuardReading::InverseWord);
        acc.hit(kOrderAgreement, by_meet == a && a == p && p == q, [&] {
          return tuple({&x, &y}) + " meet=" + std::to_string(by_meet) + " thm=" + std::to_string(a) +
                 " prefix=" + std::to_string(p) + " cut=" + std::to_string(q);
        });
        for (std::size_t k = 0; k < n; ++k) {
          const Word& z = ball[k];
          acc.hit(kMeetSemilattice, d.mhat(c, one, z) == d.mhat(x, one, caps[j * n + k]),
                  [&] { return "assoc " + tuple({&x, &y, &z}); });
          if (by_meet && caps[j * n + k] == y) {
            const Word zi = fp.inv(z);
            acc.hit(kMeetReversal, sub(fp.mul(zi, y), fp.mul(zi, x)), [&] { return tuple({&x, &y, &z}); });
          }
        }
      }
      if (!x.is_identity()) {
        const auto conf = d.configuration(x);
        bool ok = conf.entries.front().zeta.is_identity();
        for (std::size_t k = 0; k + 1 < conf.entries.size(); ++k) {
          ok = ok && sub(conf.entries[k].zeta, conf.entries[k + 1].zeta);
        }
        ok = ok && sub(conf.entries.back().zeta, x);
        acc.hit(kConfigurationChain, ok, [&] { return str(x); });

        const auto cell = d.deformed_cell(one, x);
        const auto wide = fp.ball(x.length() + 2);
        std::vector<Word> brute;
        for (const auto& z : wide)
          if (d.mhat(one, x, z) == z) brute.push_back(z);
        std::sort(brute.begin(), brute.end());
        acc.hit(kCellBruteForce, brute == cell, [&] { return str(x); });

        if (locally_linear && cell.size() <= kMaxElements) {
          std::unordered_map<Word, ElementId, WordHash> index;
          for (ElementId k = 0; k < cell.size(); ++k) index.emplace(cell[k], k);
          bool closed = true;
          TernaryTable t(cell.size());
          for (ElementId a1 = 0; a1 < cell.size(); ++a1)
            for (ElementId a2 = 0; a2 < cell.size(); ++a2)
              for (ElementId a3 = 0; a3 < cell.size(); ++a3) {
                auto it = index.find(d.mhat(cell[a1], cell[a2], cell[a3]));
                if (it == index.end()) {
                  closed = false;
                } else {
                  t.set(a1, a2, a3, it->second);
                }
              }
          acc.hit(kCellLocallyLinear, closed && is_locally_linear(MedianTable::unchecked(t)),
                  [&] { return str(x); });
        }
      }
    }
  });

  VerifyReport report;
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    VerifyReport::Check merged;
    merged.name = kCheckNames[c];
    for (const auto& a : accs) {
      merged.instances += a.checks[c].instances;
      merged.failures += a.checks[c].failures;
      for (const auto& s : a.checks[c].samples)
        if (merged.samples.size() < opts.max_violations) merged.samples.push_back(s);
    }
    if (c == kSelfDistributivity && !opts.check_m3) continue;
    if (c == kCellLocallyLinear && !locally_linear) continue;
    report.checks.push_back(std::move(merged));
  }
  return report;
}

namespace {

// Backtracking over the values of m on sorted distinct triples; M1 and
// M2 fix every other entry.
class OpsSearch {
 public:
  OpsSearch(const FiniteGroup& h, std::size_t n) : h_(h), n_(n), t_(n * n * n, kUnset) {
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y) {
        set_sym(x, x, y, x);
        set_sym(x, y, y, y);
      }
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = x + 1; y < n; ++y)
        for (ElementId z = y + 1; z < n; ++z) triples_.push_back({x, y, z});
  }

  std::vector<MedianTable> run() {
    rec(0);
    std::sort(found_.begin(), found_.end(),
              [](const TernaryTable& a, const TernaryTable& b) { return a.values() < b.values(); });
    std::vector<MedianTable> out;
    for (auto& t : found_) out.push_back(MedianTable::unchecked(std::move(t)));
    return out;
  }

 private:
  static constexpr ElementId kUnset = ~ElementId{0};

  ElementId& at(ElementId x, ElementId y, ElementId z) { return t_[(x * n_ + y) * n_ + z]; }

  void set_sym(ElementId x, ElementId y, ElementId z, ElementId v) {
    at(x, y, z) = v;
    at(x, z, y) = v;
    at(y, x, z) = v;
    at(y, z, x) = v;
    at(z, x, y) = v;
    at(z, y, x) = v;
  }

  bool consistent() {
    const auto n = static_cast<ElementId>(n_);
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y)
        for (ElementId z = 0; z < n; ++z) {
          const ElementId xyz = at(x, y, z);
          if (xyz == kUnset) continue;
          for (ElementId u = 0; u < n; ++u)
            for (ElementId v = 0; v < n; ++v) {
              const ElementId l = at(xyz, u, v);
              if (l == kUnset) continue;
              const ElementId a = at(x, u, v), b = at(y, u, v);
              if (a == kUnset || b == kUnset) continue;
              const ElementId r = at(a, b, z);
              if (r != kUnset && r != l) return false;
            }
        }
    return true;
  }

  bool compatible() const {
    TernaryTable t(n_, t_);
    for (std::uint32_t g = 1; g < h_.order(); ++g)
      for (ElementId x = 0; x < n_; ++x)
        for (ElementId y = 0; y < n_; ++y)
          for (ElementId z = 0; z < n_; ++z)
            if (t(act_id(h_, x, g), act_id(h_, y, g), act_id(h_, z, g)) != act_id(h_, t(x, y, z), g)) {
              return false;
            }
    return true;
  }

  void rec(std::size_t k) {
    if (k == triples_.size()) {
      TernaryTable t(n_, t_);
      if (check_median_axioms(t, 1).passed() && compatible()) found_.push_back(std::move(t));
      return;
    }
    const auto [x, y, z] = triples_[k];
    for (ElementId v = 0; v < n_; ++v) {
      set_sym(x, y, z, v);
      if (consistent()) rec(k + 1);
    }
    set_sym(x, y, z, kUnset);
  }

  const FiniteGroup& h_;
  std::size_t n_;
  std::vector<ElementId> t_;
  std::vector<std::array<ElementId, 3>> triples_;
  std::vector<TernaryTable> found_;
};

// Search over x n y = m(x, 1, y). Translation invariance ties the value
// on {x, y} to the values on {x^-1, x^-1 y} and {y^-1, y^-1 x}, so one
// value is chosen per orbit and propagated.
class GroupOpsSearch {
 public:
  explicit GroupOpsSearch(const FiniteGroup& g) : g_(g), n_(g.order()), c_(n_ * n_, kUnset) {
    for (std::uint32_t x = 0; x < n_; ++x) {
      at(x, x) = x;
      at(0, x) = 0;
      at(x, 0) = 0;
    }
    std::vector<bool> seen(n_ * n_, false);
    for (std::uint32_t x = 1; x < n_; ++x)
      for (std::uint32_t y = x + 1; y < n_; ++y) {
        if (seen[x * n_ + y]) continue;
        reps_.push_back({x, y});
        for (auto [a, b] : orbit(x, y)) {
          seen[a * n_ + b] = seen[b * n_ + a] = true;
        }
      }
  }

  std::vector<MedianTable> run() {
    rec(0);
    std::sort(found_.begin(), found_.end(),
              [](const TernaryTable& a, const TernaryTable& b) { return a.values() < b.values(); });
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    std::vector<MedianTable> out;
    for (auto& t : found_) out.push_back(MedianTable::unchecked(std::move(t)));
    return out;
  }

 private:
  static constexpr std::uint32_t kUnset = ~std::uint32_t{0};

  std::uint32_t& at(std::uint32_t x, std::uint32_t y) { return c_[x * n_ + y]; }

  // Pairs {x, y}, {x^-1, x^-1 y}, {y^-1, y^-1 x} with the left factor that
  // carries the value of x n y onto each.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> orbit(std::uint32_t x, std::uint32_t y) const {
    const auto xi = g_.inv(x), yi = g_.inv(y);
    return {{x, y}, {xi, g_.mul(xi, y)}, {yi, g_.mul(yi, x)}};
  }

  bool assign(std::uint32_t x, std::uint32_t y, std::uint32_t v, std::vector<std::size_t>& undo) {
    const std::array<std::uint32_t, 3> factor = {0, g_.inv(x), g_.inv(y)};
    const auto pairs = orbit(x, y);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [a, b] = pairs[k];
      const auto val = g_.mul(factor[k], v);
      for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
        auto& cell = at(p, q);
        if (cell == kUnset) {
          cell = val;
          undo.push_back(p * n_ + q);
        } else if (cell != val) {
          return false;
        }
      }
    }
    return true;
  }

  bool consistent() {
    auto sub = [&](std::uint32_t a, std::uint32_t b) -> int {
      const auto v = at(a, b);
      return v == kUnset ? -1 : (v == a ? 1 : 0);
    };
    for (std::uint32_t x = 0; x < n_; ++x)
      for (std::uint32_t y = 0; y < n_; ++y) {
        const auto xy = at(x, y);
        if (xy == kUnset) continue;
        const auto xi = g_.inv(x);
        if (sub(g_.mul(xi, xy), g_.mul(xi, y)) == 0) return false;
        for (std::uint32_t z = 0; z < n_; ++z) {
          const auto yz = at(y, z);
          if (yz == kUnset) continue;
          const auto l = at(xy, z), r = at(x, yz);
          if (l != kUnset && r != kUnset && l != r) return false;
          if (xy == x && yz == y) {
            const auto zi = g_.inv(z);
            if (sub(g_.mul(zi, y), g_.mul(zi, x)) == 0) return false;
          }
        }
      }
    return true;
  }

  void rec(std::size_t k) {
    if (k == reps_.size()) {
      auto t = TernaryTable::from_function(n_, [&](ElementId x, ElementId y, ElementId z) {
        const auto xi = g_.inv(x);
        return g_.mul(x, at(g_.mul(xi, y), g_.mul(xi, z)));
      });
      if (!check_median_axioms(t, 1).passed()) return;
      for (std::uint32_t s = 1; s < n_; ++s)
        for (ElementId x = 0; x < n_; ++x)
          for (ElementId y = 0; y < n_; ++y)
            for (ElementId z = 0; z < n_; ++z)
              if (t(g_.mul(s, x), g_.mul(s, y), g_.mul(s, z)) != g_.mul(s, t(x, y, z))) return;
      found_.push_back(std::move(t));
      return;
    }
    const auto [x, y] = reps_[k];
    for (std::uint32_t v = 0; v < n_; ++v) {
      std::vector<std::size_t> undo;
      if (assign(x, y, v, undo) && consistent()) rec(k + 1);
      for (auto idx : undo) c_[idx] = kUnset;
    }
  }

  const FiniteGroup& g_;
  std::size_t n_;
  std::vector<std::uint32_t> c_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> reps_;
  std::vector<TernaryTable> found_;
};

}  // namespace

std::vector<MedianTable> enumerate_median_ops(const FiniteGroup& h, std::size_t indices) {
  const std::size_t n = h.order() * indices;
  if (n == 0) throw DomainError("X must be nonempty");
  if (n > kMaxOpsElements) throw GuardExceeded("median operation census limited to |X| <= 5");
  return OpsSearch(h, n).run();
}

std::vector<MedianTable> enumerate_median_group_ops(const FiniteGroup& g) {
  if (g.order() > kMaxGroupOpsOrder) throw GuardExceeded("median group census limited to |G| <= 8");
  return GroupOpsSearch(g).run();
}

std::string shape_name(const MedianTable& m) {
  if (m.size() == 1) return "point";
  if (m.size() == 2) return "segment";
  if (!is_locally_linear(m)) {
    if (m.size() == 4) return "square";
    return "other";
  }
  for (ElementId x = 0; x < m.size(); ++x)
    for (ElementId y = x + 1; y < m.size(); ++y)
      if (interval(m, x, y) == m.all()) return "chain";
  if (m.size() == 4) return "star";
  return "other";
}

std::vector<AdmissibleMap> admissible_maps(const FiniteGroup& g, const std::vector<std::uint32_t>& x) {
  if (g.order() > kMaxGroupOpsOrder) throw GuardExceeded("admissible map search limited to |G| <= 8");
  std::vector<bool> in_x(g.order(), false);
  for (auto e : x) {
    if (e >= g.order()) throw MalformedInput("subset element out of range");
    in_x[e] = true;
  }
  if (!in_x[0]) throw DomainError("subset must contain the identity");
  {
    std::vector<bool> gen = in_x;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint32_t a = 0; a < g.order(); ++a)
        for (std::uint32_t b = 0; b < g.order(); ++b)
          if (gen[a] && gen[b] && !gen[g.mul(a, b)]) {
            gen[g.mul(a, b)] = true;
            grew = true;
          }
    }
    if (!std::all_of(gen.begin(), gen.end(), [](bool v) { return v; })) {
      throw DomainError("subset does not generate the group");
    }
  }
  std::vector<std::uint32_t> xs;
  for (std::uint32_t e = 0; e < g.order(); ++e)
    if (in_x[e]) xs.push_back(e);
  std::vector<std::uint32_t> free;
  for (std::uint32_t e = 0; e < g.order(); ++e)
    if (!in_x[e]) free.push_back(e);

  const auto ops = enumerate_median_group_ops(g);
  const auto target = ElementSubset::of(g.order(), std::vector<ElementId>(xs.begin(), xs.end()));
  std::vector<AdmissibleMap> out;
  std::vector<std::uint32_t> phi(g.order());
  for (auto e : xs) phi[e] = e;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == free.size()) {
      AdmissibleMap a;
      a.phi = phi;
      FoldingMap f{std::vector<ElementId>(phi.begin(), phi.end())};
      for (std::size_t o = 0; o < ops.size(); ++o) {
        if (is_convex(ops[o], target) && is_folding(ops[o], f)) a.ops.push_back(o);
      }
      out.push_back(std::move(a));
      return;
    }
    for (auto v : xs) {
      phi[free[k]] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace medianforge
