#pragma once

// Prime convex subsets of a finite median algebra and the lattice of
// quasicompact opens over them.
//
// For a finite algebra the opens U(A) are exactly the down-sets of
// (Spec, inclusion) generated by the primes X \ A, so an OpenSet is kept
// both as its extension (a bitset over the prime list) and as a canonical
// generator antichain: one generator X \ P per maximal prime P of the
// extension, sorted by mask.

#include <optional>
#include <string>
#include <vector>

#include "medianforge/bitset.hpp"
#include "medianforge/median_core.hpp"

namespace medianforge {

using PrimeConvex = ElementSubset;

/// All P with P and X \ P convex, sorted by mask. Includes the empty set
/// and X.
std::vector<PrimeConvex> spec(const MedianTable& m);

class SpectralSpace;

class OpenSet {
 public:
  const Bitset& extension() const { return extension_; }
  const std::vector<ElementSubset>& generators() const { return generators_; }
  bool empty() const { return extension_.none(); }
  bool contains_prime(std::size_t prime_index) const { return extension_.test(prime_index); }

  friend bool operator==(const OpenSet& a, const OpenSet& b) { return a.extension_ == b.extension_; }
  friend auto operator<=>(const OpenSet& a, const OpenSet& b) {
    return a.extension_ <=> b.extension_;
  }

 private:
  friend class SpectralSpace;
  Bitset extension_;
  std::vector<ElementSubset> generators_;
};

/// Spec of a fixed algebra together with the lattice operations on its
/// opens. Holds a copy of the table.
class SpectralSpace {
 public:
  explicit SpectralSpace(MedianTable m);

  const MedianTable& algebra() const { return m_; }
  const std::vector<PrimeConvex>& primes() const { return primes_; }
  std::size_t prime_index(const PrimeConvex& p) const;

  /// Primes disjoint from A. U(empty) is the whole space.
  OpenSet u_set(const ElementSubset& a) const;
  OpenSet u_point(ElementId x) const { return u_set(ElementSubset::singleton(m_.size(), x)); }
  /// Primes containing A.
  std::vector<PrimeConvex> v_set(const ElementSubset& a) const;

  /// Builds an open from an extension; throws DomainError when the set of
  /// primes is not a down-set or contains X while being proper.
  OpenSet from_extension(const Bitset& ext) const;

  OpenSet join(const OpenSet& a, const OpenSet& b) const;
  OpenSet meet(const OpenSet& a, const OpenSet& b) const;
  /// {P | X \ P not in U}. Rejects the empty and the full open.
  OpenSet negate(const OpenSet& u) const;
  /// (a ^ b) v (b ^ c) v (c ^ a).
  OpenSet median(const OpenSet& a, const OpenSet& b, const OpenSet& c) const;

  bool is_full(const OpenSet& u) const { return u.extension().count() == primes_.size(); }

  /// Every nonempty proper open (down-sets of primes missing X). Guarded to
  /// algebras with at most 12 elements.
  std::vector<OpenSet> lattice() const;

 private:
  OpenSet make(Bitset ext) const;

  MedianTable m_;
  std::vector<PrimeConvex> primes_;
  std::vector<std::size_t> complement_index_;
  std::size_t full_index_ = 0;
};

struct DualityReport {
  bool passed = true;
  std::size_t pairs_checked = 0;
  std::string counterexample;
};

/// Checks [A] = intersection of V(A) and V(A) n U(B) nonempty <=> [A] n [B]
/// empty over all nonempty A, B of size at most `cap`.
DualityReport duality_check(const MedianTable& m, std::size_t cap = 3);

struct InvariantOpensReport {
  bool passed = true;
  std::vector<OpenSet> invariant;
  /// invariant[k] == U(point_of[k]); -1 when no point matches.
  std::vector<int> point_of;
  std::string counterexample;
};

/// Computes the negation-fixed opens, matches them with the point opens
/// U(x) and checks the lattice median on point opens against the table.
InvariantOpensReport invariant_opens(const MedianTable& m);

}  // namespace medianforge
