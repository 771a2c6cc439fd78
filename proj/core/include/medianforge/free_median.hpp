#pragma once

// The free median algebra over a finite base A = {0, ..., n-1}.
//
// An open is an antichain {F_i} of nonempty subsets of A (bit masks),
// standing for the union of the U(F_i). An element of fms(A) is an open
// fixed by negation: its members pairwise intersect and every transversal
// contains a member. Equivalently, the monotone Boolean function
// S -> [every F_i meets S] is self-dual.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "medianforge/bitset.hpp"
#include "medianforge/median_core.hpp"

namespace medianforge {

using BaseMask = std::uint32_t;

inline constexpr std::size_t kFmsMaxBase = 30;
inline constexpr std::size_t kFmsMaxEnumerateBase = 5;

class FmsOpen {
 public:
  FmsOpen() = default;
  /// Minimalizes and sorts `family` by (popcount, mask). Throws
  /// MalformedInput for empty members or members outside the base.
  FmsOpen(std::size_t base, std::vector<BaseMask> family);

  std::size_t base() const { return base_; }
  const std::vector<BaseMask>& family() const { return family_; }
  bool empty() const { return family_.empty(); }

  friend bool operator==(const FmsOpen&, const FmsOpen&) = default;
  friend auto operator<=>(const FmsOpen& a, const FmsOpen& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    if (auto c = a.family_.size() <=> b.family_.size(); c != 0) return c;
    return a.family_ <=> b.family_;
  }

 private:
  std::size_t base_ = 0;
  std::vector<BaseMask> family_;
};

class FmsElement {
 public:
  /// Validates conditions (i) and (ii); throws DomainError otherwise.
  explicit FmsElement(FmsOpen open);

  std::size_t base() const { return open_.base(); }
  const std::vector<BaseMask>& family() const { return open_.family(); }
  const FmsOpen& open() const { return open_; }

  friend bool operator==(const FmsElement&, const FmsElement&) = default;
  friend auto operator<=>(const FmsElement&, const FmsElement&) = default;

 private:
  FmsOpen open_;
};

/// Members pairwise intersect.
bool fms_condition_intersecting(const FmsOpen& x);
/// Every transversal contains a member (exhaustive over subsets of A).
bool fms_condition_transversal(const FmsOpen& x);
bool fms_is_element(const FmsOpen& x);

FmsElement fms_generator(std::size_t base, std::size_t a);

/// Minimal transversals of the family by exhaustive scan of the subsets of
/// its union. Rejects the empty family.
FmsOpen fms_negate(const FmsOpen& x);

FmsOpen fms_join(const FmsOpen& x, const FmsOpen& y);
FmsOpen fms_meet(const FmsOpen& x, const FmsOpen& y);
FmsElement fms_median(const FmsElement& x, const FmsElement& y, const FmsElement& z);

/// Every member meets S.
bool fms_eval(const FmsOpen& x, BaseMask s);
inline bool fms_eval(const FmsElement& x, BaseMask s) { return fms_eval(x.open(), s); }

/// Truth table of fms_eval over all 2^n subsets; bit S is eval(x, S).
Bitset fms_truth_table(const FmsOpen& x);

/// Recovers the open whose members are the minimal false-complements:
/// the family is read from the minimal satisfying sets of the dual.
FmsOpen fms_from_truth_table(std::size_t base, const Bitset& table);

/// All elements of fms(A) by enumerating antichains and testing (i), (ii).
/// Sorted canonically. Guarded to n <= 5.
std::vector<FmsElement> fms_enumerate(std::size_t base);

/// Independent count: closure of the generator truth tables under
/// pointwise majority. Guarded to n <= 5.
std::vector<Bitset> fms_majority_closure(std::size_t base);

/// fms(A) as a median table with ids in fms_enumerate order (n <= 4).
MedianTable fms_median_table(std::size_t base);

/// Left action of a permutation of the base on families.
FmsOpen fms_permute(const FmsOpen& x, const std::vector<std::size_t>& perm);

/// Text rendering with base letters a, b, c, ...: "{{a,b},{a,c},{b,c}}".
std::string to_string(const FmsOpen& x);
inline std::string to_string(const FmsElement& x) { return to_string(x.open()); }
/// Inverse of to_string; throws MalformedInput.
FmsOpen parse_fms(std::size_t base, const std::string& text);

}  // namespace medianforge
