#pragma once

// Finite median algebras given by a full ternary table.
//
// Elements are dense ids 0..n-1 and subsets are 64-bit characteristic
// masks, so a single algebra holds at most 64 elements. Everything here is
// a pure function of immutable inputs.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace medianforge {

using ElementId = std::uint32_t;

inline constexpr std::size_t kMaxElements = 64;

/// Subset of the element set of a fixed algebra, stored as a mask.
class ElementSubset {
 public:
  ElementSubset() = default;
  ElementSubset(std::size_t universe, std::uint64_t mask);

  static ElementSubset none(std::size_t universe) { return {universe, 0}; }
  static ElementSubset all(std::size_t universe);
  static ElementSubset singleton(std::size_t universe, ElementId x);
  static ElementSubset of(std::size_t universe, std::initializer_list<ElementId> ids);
  static ElementSubset of(std::size_t universe, const std::vector<ElementId>& ids);

  std::size_t universe() const { return universe_; }
  std::uint64_t mask() const { return mask_; }
  std::size_t size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(ElementId x) const { return x < universe_ && ((mask_ >> x) & 1U); }
  void insert(ElementId x);
  bool is_subset_of(const ElementSubset& other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  ElementSubset complement() const;
  std::vector<ElementId> elements() const;

  friend ElementSubset operator|(ElementSubset a, const ElementSubset& b) {
    a.mask_ |= b.mask_;
    return a;
  }
  friend ElementSubset operator&(ElementSubset a, const ElementSubset& b) {
    a.mask_ &= b.mask_;
    return a;
  }
  friend bool operator==(const ElementSubset&, const ElementSubset&) = default;
  friend auto operator<=>(const ElementSubset& a, const ElementSubset& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  std::size_t universe_ = 0;
  std::uint64_t mask_ = 0;
};

/// A raw candidate ternary operation on {0..n-1}. Values are not validated
/// on construction; check_median_axioms does that.
class TernaryTable {
 public:
  TernaryTable() = default;
  explicit TernaryTable(std::size_t n);
  TernaryTable(std::size_t n, std::vector<ElementId> values);

  /// Builds the table by evaluating f on every ordered triple.
  static TernaryTable from_function(
      std::size_t n, const std::function<ElementId(ElementId, ElementId, ElementId)>& f);

  std::size_t size() const { return n_; }
  ElementId operator()(ElementId x, ElementId y, ElementId z) const {
    return values_[(static_cast<std::size_t>(x) * n_ + y) * n_ + z];
  }
  void set(ElementId x, ElementId y, ElementId z, ElementId value) {
    values_[(static_cast<std::size_t>(x) * n_ + y) * n_ + z] = value;
  }
  const std::vector<ElementId>& values() const { return values_; }

  friend bool operator==(const TernaryTable&, const TernaryTable&) = default;
  friend auto operator<=>(const TernaryTable&, const TernaryTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ElementId> values_;
};

enum class Axiom { Symmetry, Absorption, SelfDistributivity };

std::string to_string(Axiom a);

/// One failed axiom instance. `args` holds the triple (M1, M2 use the
/// first two or three entries) or the 5-tuple (x, y, z, u, v) for M3.
struct AxiomViolation {
  Axiom axiom;
  std::array<ElementId, 5> args{};
  std::size_t arity = 3;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool truncated = false;
  bool passed() const { return violations.empty(); }
};

/// Checks M1 (symmetry), M2 (absorption) and M3 (self-distributivity)
/// exhaustively. Throws MalformedInput when the table holds an id >= n or
/// is empty. At most `max_violations` instances are recorded.
AxiomReport check_median_axioms(const TernaryTable& table, std::size_t max_violations = 16);

/// A finite median algebra. Construction through `checked` guarantees the
/// axioms hold; `unchecked` only validates the id range.
class MedianTable {
 public:
  static MedianTable checked(TernaryTable table, std::vector<std::string> labels = {});
  static MedianTable unchecked(TernaryTable table, std::vector<std::string> labels = {});

  std::size_t size() const { return table_.size(); }
  ElementId operator()(ElementId x, ElementId y, ElementId z) const { return table_(x, y, z); }
  const TernaryTable& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(ElementId x) const;

  ElementSubset none() const { return ElementSubset::none(size()); }
  ElementSubset all() const { return ElementSubset::all(size()); }

  friend bool operator==(const MedianTable& a, const MedianTable& b) {
    return a.table_ == b.table_;
  }

 private:
  MedianTable(TernaryTable table, std::vector<std::string> labels);

  TernaryTable table_;
  std::vector<std::string> labels_;
};

/// Total self-map of the element set.
struct FoldingMap {
  std::vector<ElementId> image;

  ElementId operator()(ElementId x) const { return image[x]; }
  friend bool operator==(const FoldingMap&, const FoldingMap&) = default;
};

/// [x, y] = {z | m(x, y, z) = z}.
ElementSubset interval(const MedianTable& m, ElementId x, ElementId y);

bool is_convex(const MedianTable& m, const ElementSubset& s);

/// Least convex superset. The empty set is its own hull.
ElementSubset convex_hull(const MedianTable& m, const ElementSubset& a);

/// Least median subset containing `s`.
ElementSubset median_closure(const MedianTable& m, const ElementSubset& s);

/// Meet of the elements of `a` in the order based at `base`, folding
/// y, z -> m(y, base, z). Throws DomainError for empty `a`.
ElementId meet_of(const MedianTable& m, ElementId base, const ElementSubset& a);

/// The folding onto the hull of `a`: x -> meet of `a` based at x.
FoldingMap folding_for(const MedianTable& m, const ElementSubset& a);

/// phi(m(x, y, z)) = m(phi(x), y, phi(z)) for all triples.
bool is_folding(const MedianTable& m, const FoldingMap& phi);

/// For all a, b and c in [a, b]: [a, b] = [a, c] u [c, b].
bool is_locally_linear(const MedianTable& m);

/// Ends of the cell [x, y]: elements a of the cell with [a, b] = [x, y]
/// for some b in the cell.
ElementSubset cell_boundary(const MedianTable& m, ElementId x, ElementId y);

/// The unique partner b of an end a with [a, b] = [x, y]. Empty when `a`
/// is not an end, or (never for a median algebra) when the partner is not
/// unique.
std::optional<ElementId> cell_opposite(const MedianTable& m, ElementId x, ElementId y, ElementId a);

/// Length of a maximal chain in ([x, y], order based at x).
std::size_t distance(const MedianTable& m, ElementId x, ElementId y);

/// Common shapes used as fixtures and test oracles.
namespace shapes {
/// Path 0 - 1 - ... - (n-1).
MedianTable chain(std::size_t n);
/// Center 0 with leaves 1..leaves.
MedianTable star(std::size_t leaves);
/// 4-cycle a - b - c - d - a (opposite pairs (a, c), (b, d)); the four
/// arguments must be a permutation of 0..3.
MedianTable square(ElementId a, ElementId b, ElementId c, ElementId d);
/// Boolean cube {0,1}^dim with coordinate-wise majority; ids are masks.
MedianTable cube(std::size_t dim);
}  // namespace shapes

}  // namespace medianforge
