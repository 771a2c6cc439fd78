#pragma once

// Median group operations on H * F(I') lying over a compatible median
// operation m on X = H x I.
//
// The operation is an evaluator on words, never a table:
//   mhat(u, v, w) = t . m(phi(t^-1 u), phi(t^-1 v), phi(t^-1 w)),
// with t the tree median Y(u, v, w).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "medianforge/group_words.hpp"
#include "medianforge/median_core.hpp"

namespace medianforge {

/// One failure of m(h x, h y, h z) = h m(x, y, z).
struct CompatViolation {
  std::uint32_t h;
  ElementId x, y, z;
};

struct CompatReport {
  AxiomReport axioms;
  std::vector<CompatViolation> violations;
  bool locally_linear = false;
  /// Always true for finite X; kept so reports list both classes.
  bool simplicial = true;
  bool passed() const { return axioms.passed() && violations.empty(); }
};

/// Checks the median axioms and H-compatibility of a table on X, with
/// X-point ids as in FreeProduct::x_id.
CompatReport check_compat(const FiniteGroup& h, std::size_t indices, const TernaryTable& m);

/// The H-set X = H x I with a compatible median table.
class HMedianSet {
 public:
  /// Throws DomainError when the table fails check_compat.
  HMedianSet(FreeProduct words, MedianTable m);

  const FreeProduct& words() const { return words_; }
  const FiniteGroup& group() const { return words_.group(); }
  const MedianTable& table() const { return m_; }

  XPoint median(const XPoint& a, const XPoint& b, const XPoint& c) const;
  /// Cell [a, b] of (X, m) in id order.
  std::vector<XPoint> interval(const XPoint& a, const XPoint& b) const;
  bool in_interval(const XPoint& a, const XPoint& b, const XPoint& z) const;

 private:
  FreeProduct words_;
  MedianTable m_;
};

/// Which reading of the guard in the fourth order criterion to use.
enum class GuardReading {
  /// phi(w^-1) = 1 implies phi(w^-1 v) != 1 (the reading used for C_v).
  InverseWord,
  /// phi(w) = 1 implies phi(w^-1 v) != 1.
  Word,
};

/// Evaluator variants; SkipTranslation drops the t-translation and exists
/// only so tests can confirm the checks catch a broken evaluator.
enum class Evaluator { Canonical, SkipTranslation };

struct ConfigurationEntry {
  Word w;
  Word zeta;
  /// Tree interval [zeta(w_i), zeta(w_{i+1})], or [zeta(w_n), v].
  Word interval_lo;
  Word interval_hi;
  std::size_t interval_size;
};

struct Configuration {
  Word v;
  std::vector<ConfigurationEntry> entries;
};

class DeformedGroup {
 public:
  explicit DeformedGroup(HMedianSet x, Evaluator eval = Evaluator::Canonical);

  const HMedianSet& x() const { return x_; }
  const FreeProduct& words() const { return x_.words(); }

  Word mhat(const Word& u, const Word& v, const Word& w) const;
  /// u n v via the closed formula around a = u ^ v.
  Word cap(const Word& u, const Word& v) const;

  /// (u ^ v)^-1 u lies in [phi((u ^ v)^-1), phi((u ^ v)^-1 v)].
  bool subset_order(const Word& u, const Word& v) const;
  /// Some prefix w of v has w^-1 u in [phi(w^-1), phi(w^-1 v)].
  bool subset_by_prefix(const Word& u, const Word& v) const;
  /// As subset_by_prefix, restricted to prefixes with phi(w^-1) in I and
  /// the guard read as `reading`; u = v = 1 is accepted directly.
  bool subset_by_cut_prefix(const Word& u, const Word& v, GuardReading reading) const;

  Configuration configuration(const Word& v) const;
  /// The cell [u, v] of (H^, mhat), sorted.
  std::vector<Word> deformed_cell(const Word& u, const Word& v) const;

 private:
  Word embed_median(const Word& t, const Word& u, const Word& v, const Word& w) const;

  HMedianSet x_;
  Evaluator eval_;
};

struct VerifyOptions {
  std::size_t radius = 3;
  std::size_t jobs = 1;
  /// Run the 5-tuple self-distributivity sweep (the costly part).
  bool check_m3 = true;
  std::size_t max_violations = 16;
};

struct VerifyReport {
  struct Check {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::vector<std::string> samples;
  };
  std::vector<Check> checks;
  bool passed() const;
  const Check* find(const std::string& name) const;
};

/// Sweeps ball(radius) for: symmetry, absorption, self-distributivity,
/// left compatibility, the phi-folding identity and image, the four
/// meet-semilattice conditions, agreement of the order criteria, the
/// closed form of the meet, and (for locally linear m) local linearity of
/// every cell [1, w].
VerifyReport verify_median_group(const DeformedGroup& d, const VerifyOptions& opts = {});

/// All median operations on X = H x I compatible with H; |X| <= 5.
std::vector<MedianTable> enumerate_median_ops(const FiniteGroup& h, std::size_t indices);

/// All median group operations on G, |G| <= 8, found through x n y with the
/// meet-semilattice constraints pruning the search. Tables are indexed by
/// group element.
std::vector<MedianTable> enumerate_median_group_ops(const FiniteGroup& g);

/// "point", "segment", "chain", "star", "square", or "other" for a small
/// table.
std::string shape_name(const MedianTable& m);

struct AdmissibleMap {
  std::vector<std::uint32_t> phi;
  /// Indices into enumerate_median_group_ops(G).
  std::vector<std::size_t> ops;
  bool admissible() const { return !ops.empty(); }
};

/// Every retraction of G onto X (identity on X) with the median group
/// operations for which it is a folding with image X. X must contain 1 and
/// generate G; |G| <= 8.
std::vector<AdmissibleMap> admissible_maps(const FiniteGroup& g, const std::vector<std::uint32_t>& x);

}  // namespace medianforge
