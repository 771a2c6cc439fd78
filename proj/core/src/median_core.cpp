#include "medianforge/median_core.hpp"

#include <algorithm>
#include <bit>

#include "medianforge/errors.hpp"

namespace medianforge {

namespace {

std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_id(const MedianTable& m, ElementId x) {
  if (x >= m.size()) {
    throw MalformedInput("element id " + std::to_string(x) + " out of range for size " +
                         std::to_string(m.size()));
  }
}

}  // namespace

ElementSubset::ElementSubset(std::size_t universe, std::uint64_t mask)
    : universe_(universe), mask_(mask & full_mask(universe)) {
  if (universe > kMaxElements) throw DomainError("subset universe exceeds 64 elements");
}

ElementSubset ElementSubset::all(std::size_t universe) { return {universe, full_mask(universe)}; }

ElementSubset ElementSubset::singleton(std::size_t universe, ElementId x) {
  ElementSubset s(universe, 0);
  s.insert(x);
  return s;
}

ElementSubset ElementSubset::of(std::size_t universe, std::initializer_list<ElementId> ids) {
  ElementSubset s(universe, 0);
  for (auto x : ids) s.insert(x);
  return s;
}

ElementSubset ElementSubset::of(std::size_t universe, const std::vector<ElementId>& ids) {
  ElementSubset s(universe, 0);
  for (auto x : ids) s.insert(x);
  return s;
}

std::size_t ElementSubset::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

void ElementSubset::insert(ElementId x) {
  if (x >= universe_) throw MalformedInput("element id out of range");
  mask_ |= std::uint64_t{1} << x;
}

ElementSubset ElementSubset::complement() const { return {universe_, ~mask_}; }

std::vector<ElementId> ElementSubset::elements() const {
  std::vector<ElementId> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<ElementId>(std::countr_zero(m)));
  }
  return out;
}

TernaryTable::TernaryTable(std::size_t n) : n_(n), values_(n * n * n, 0) {}

TernaryTable::TernaryTable(std::size_t n, std::vector<ElementId> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n * n * n) throw MalformedInput("ternary table has wrong entry count");
}

TernaryTable TernaryTable::from_function(
    std::size_t n, const std::function<ElementId(ElementId, ElementId, ElementId)>& f) {
  TernaryTable t(n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z) t.set(x, y, z, f(x, y, z));
  return t;
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::Symmetry: return "M1";
    case Axiom::Absorption: return "M2";
    case Axiom::SelfDistributivity: return "M3";
  }
  return "?";
}

AxiomReport check_median_axioms(const TernaryTable& t, std::size_t max_violations) {
  const std::size_t n = t.size();
  if (n == 0) throw MalformedInput("median table must be nonempty");
  for (auto v : t.values()) {
    if (v >= n) throw MalformedInput("table value " + std::to_string(v) + " out of range");
  }

  AxiomReport report;
  auto record = [&](Axiom a, std::array<ElementId, 5> args, std::size_t arity) {
    if (report.violations.size() < max_violations) {
      report.violations.push_back({a, args, arity});
    } else {
      report.truncated = true;
    }
  };

  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z) {
        const auto v = t(x, y, z);
        if (v != t(y, x, z) || v != t(x, z, y)) record(Axiom::Symmetry, {x, y, z, 0, 0}, 3);
      }
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (t(x, y, x) != x) record(Axiom::Absorption, {x, y, x, 0, 0}, 3);

  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z) {
        const auto xyz = t(x, y, z);
        for (ElementId u = 0; u < n; ++u)
          for (ElementId v = 0; v < n; ++v) {
            if (report.truncated) return report;
            if (t(xyz, u, v) != t(t(x, u, v), t(y, u, v), z)) {
              record(Axiom::SelfDistributivity, {x, y, z, u, v}, 5);
            }
          }
      }
  return report;
}

MedianTable::MedianTable(TernaryTable table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  if (table_.size() == 0) throw MalformedInput("median table must be nonempty");
  if (table_.size() > kMaxElements) throw DomainError("median tables are limited to 64 elements");
  if (!labels_.empty() && labels_.size() != table_.size()) {
    throw MalformedInput("label count does not match table size");
  }
}

MedianTable MedianTable::checked(TernaryTable table, std::vector<std::string> labels) {
  auto report = check_median_axioms(table, 1);
  if (!report.passed()) {
    const auto& v = report.violations.front();
    std::string where;
    for (std::size_t i = 0; i < v.arity; ++i) where += (i ? "," : "") + std::to_string(v.args[i]);
    throw DomainError("table fails " + to_string(v.axiom) + " at (" + where + ")");
  }
  return MedianTable(std::move(table), std::move(labels));
}

MedianTable MedianTable::unchecked(TernaryTable table, std::vector<std::string> labels) {
  for (auto v : table.values()) {
    if (v >= table.size()) throw MalformedInput("table value out of range");
  }
  return MedianTable(std::move(table), std::move(labels));
}

std::string MedianTable::label(ElementId x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

ElementSubset interval(const MedianTable& m, ElementId x, ElementId y) {
  check_id(m, x);
  check_id(m, y);
  ElementSubset s = m.none();
  for (ElementId z = 0; z < m.size(); ++z)
    if (m(x, y, z) == z) s.insert(z);
  return s;
}

bool is_convex(const MedianTable& m, const ElementSubset& s) {
  const auto elems = s.elements();
  for (auto x : elems)
    for (auto y : elems)
      if (!interval(m, x, y).is_subset_of(s)) return false;
  return true;
}

ElementSubset convex_hull(const MedianTable& m, const ElementSubset& a) {
  ElementSubset s = a;
  while (true) {
    ElementSubset next = s;
    const auto elems = s.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j) next = next | interval(m, elems[i], elems[j]);
    if (next == s) return s;
    s = next;
  }
}

ElementSubset median_closure(const MedianTable& m, const ElementSubset& s0) {
  ElementSubset s = s0;
  while (true) {
    ElementSubset next = s;
    const auto elems = s.elements();
    for (auto x : elems)
      for (auto y : elems)
        for (auto z : elems) next.insert(m(x, y, z));
    if (next == s) return s;
    s = next;
  }
}

ElementId meet_of(const MedianTable& m, ElementId base, const ElementSubset& a) {
  check_id(m, base);
  const auto elems = a.elements();
  if (elems.empty()) throw DomainError("meet of an empty subset");
  ElementId acc = elems.front();
  for (std::size_t i = 1; i < elems.size(); ++i) acc = m(acc, base, elems[i]);
  return acc;
}

FoldingMap folding_for(const MedianTable& m, const ElementSubset& a) {
  if (a.empty()) throw DomainError("folding of an empty subset");
  FoldingMap phi;
  phi.image.resize(m.size());
  for (ElementId x = 0; x < m.size(); ++x) phi.image[x] = meet_of(m, x, a);
  return phi;
}

bool is_folding(const MedianTable& m, const FoldingMap& phi) {
  if (phi.image.size() != m.size()) throw MalformedInput("folding map has wrong size");
  for (auto v : phi.image) check_id(m, v);
  for (ElementId x = 0; x < m.size(); ++x)
    for (ElementId y = 0; y < m.size(); ++y)
      for (ElementId z = 0; z < m.size(); ++z)
        if (phi(m(x, y, z)) != m(phi(x), y, phi(z))) return false;
  return true;
}

bool is_locally_linear(const MedianTable& m) {
  for (ElementId a = 0; a < m.size(); ++a)
    for (ElementId b = a; b < m.size(); ++b) {
      const auto ab = interval(m, a, b);
      for (auto c : ab.elements()) {
        if (!((interval(m, a, c) | interval(m, c, b)) == ab)) return false;
      }
    }
  return true;
}

ElementSubset cell_boundary(const MedianTable& m, ElementId x, ElementId y) {
  const auto cell = interval(m, x, y);
  const auto elems = cell.elements();
  ElementSubset ends = m.none();
  for (auto a : elems)
    for (auto b : elems)
      if (interval(m, a, b) == cell) {
        ends.insert(a);
        break;
      }
  return ends;
}

std::optional<ElementId> cell_opposite(const MedianTable& m, ElementId x, ElementId y, ElementId a) {
  const auto cell = interval(m, x, y);
  if (!cell.contains(a)) return std::nullopt;
  std::optional<ElementId> found;
  for (auto b : cell.elements()) {
    if (interval(m, a, b) == cell) {
      if (found) return std::nullopt;
      found = b;
    }
  }
  return found;
}

std::size_t distance(const MedianTable& m, ElementId x, ElementId y) {
  const auto cell = interval(m, x, y);
  auto elems = cell.elements();
  // Below-sets [x, a] strictly grow along a chain, so sorting by their size
  // is a linear extension of the order based at x.
  std::vector<ElementSubset> below(m.size());
  for (auto a : elems) below[a] = interval(m, x, a);
  std::sort(elems.begin(), elems.end(),
            [&](ElementId a, ElementId b) { return below[a].size() < below[b].size(); });
  std::vector<std::size_t> depth(m.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (below[elems[i]].contains(elems[j]) && elems[i] != elems[j]) {
        depth[elems[i]] = std::max(depth[elems[i]], depth[elems[j]] + 1);
      }
    }
  }
  return depth[y];
}

namespace shapes {

MedianTable chain(std::size_t n) {
  return MedianTable::unchecked(TernaryTable::from_function(
      n, [](ElementId x, ElementId y, ElementId z) {
        return std::max(std::min(x, y), std::min(std::max(x, y), z));
      }));
}

MedianTable star(std::size_t leaves) {
  return MedianTable::unchecked(TernaryTable::from_function(
      leaves + 1, [](ElementId x, ElementId y, ElementId z) -> ElementId {
        if (x == y || x == z) return x;
        if (y == z) return y;
        return 0;
      }));
}

MedianTable square(ElementId a, ElementId b, ElementId c, ElementId d) {
  std::array<ElementId, 4> order{a, b, c, d};
  std::array<ElementId, 4> pos{};
  std::array<bool, 4> seen{};
  for (ElementId i = 0; i < 4; ++i) {
    if (order[i] >= 4 || seen[order[i]]) throw MalformedInput("square needs a permutation of 0..3");
    seen[order[i]] = true;
    pos[order[i]] = i;
  }
  // Vertices are the cycle positions 0..3; position p has coordinates
  // (p in {1,2}, p in {2,3}) on the 2-cube.
  auto coord = [&](ElementId v) {
    const auto p = pos[v];
    return static_cast<unsigned>((p == 1 || p == 2) ? 1 : 0) |
           static_cast<unsigned>((p == 2 || p == 3) ? 2 : 0);
  };
  std::array<ElementId, 4> from_coord{};
  for (ElementId v = 0; v < 4; ++v) from_coord[coord(v)] = v;
  return MedianTable::unchecked(TernaryTable::from_function(
      4, [&](ElementId x, ElementId y, ElementId z) {
        const auto cx = coord(x), cy = coord(y), cz = coord(z);
        return from_coord[(cx & cy) | (cy & cz) | (cz & cx)];
      }));
}

MedianTable cube(std::size_t dim) {
  if (dim > 6) throw DomainError("cube dimension limited to 6");
  return MedianTable::unchecked(TernaryTable::from_function(
      std::size_t{1} << dim,
      [](ElementId x, ElementId y, ElementId z) { return (x & y) | (y & z) | (z & x); }));
}

}  // namespace shapes

}  // namespace medianforge
