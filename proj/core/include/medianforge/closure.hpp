#pragma once

// Lattice expressions over the prime family of a deformed median group and
// the bounded-radius fragments built from them.
//
// An SExpr {F_i} stands for the union of U(F_i), where U(F) is the set of
// primes missing every word of F. Primes are only ever sampled through
// handles (u, p) denoting u^-1 phi^-1(p), so equality of expressions is a
// semi-decision: two expressions are distinct once some handle separates
// them and otherwise merely indistinguishable at that radius.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "medianforge/bitset.hpp"
#include "medianforge/deformation.hpp"
#include "medianforge/spectral.hpp"

namespace medianforge {

struct PrimeHandle {
  Word u;
  PrimeConvex p;
};

/// phi(u w) lies in p.
bool prime_member(const FreeProduct& fp, const PrimeHandle& handle, const Word& w);

/// Handles (u, p) for every word u with l(u) <= radius and every prime p of
/// X; the prime list is closed under complement.
std::vector<PrimeHandle> prime_handles(const DeformedGroup& d, std::size_t radius);

class SExpr {
 public:
  /// Canonicalizes; every member and the family itself must be nonempty.
  explicit SExpr(std::vector<std::vector<Word>> terms);
  static SExpr point(const Word& u) { return SExpr({{u}}); }

  const std::vector<std::vector<Word>>& terms() const { return terms_; }

  friend bool operator==(const SExpr&, const SExpr&) = default;
  friend auto operator<=>(const SExpr& a, const SExpr& b) { return a.terms_ <=> b.terms_; }

 private:
  struct Canonical {};
  SExpr(Canonical, std::vector<std::vector<Word>> terms) : terms_(std::move(terms)) {}
  friend SExpr closure_join(const SExpr&, const SExpr&);
  friend SExpr closure_meet(const SExpr&, const SExpr&);
  friend SExpr closure_negate(const SExpr&);
  friend SExpr translate(const FreeProduct&, const Word&, const SExpr&);
  friend SExpr lattice_median(const SExpr&, const SExpr&, const SExpr&);

  std::vector<std::vector<Word>> terms_;
};

SExpr closure_join(const SExpr& a, const SExpr& b);
SExpr closure_meet(const SExpr& a, const SExpr& b);
/// Minimal transversals of the family.
SExpr closure_negate(const SExpr& e);
/// Left translation of every word by s.
SExpr translate(const FreeProduct& fp, const Word& s, const SExpr& e);
/// (a ^ b) v (b ^ c) v (c ^ a).
SExpr lattice_median(const SExpr& a, const SExpr& b, const SExpr& c);

/// Whether the prime denoted by the handle lies in the open e.
bool evaluate(const FreeProduct& fp, const PrimeHandle& handle, const SExpr& e);
/// One bit per handle.
Bitset signature(const FreeProduct& fp, const std::vector<PrimeHandle>& handles, const SExpr& e);

std::string to_string(const FreeProduct& fp, const SExpr& e);

/// An expression equal to its own negation.
class XHatElement {
 public:
  /// Throws DomainError unless closure_negate(e) == e.
  explicit XHatElement(SExpr e);
  static XHatElement point(const Word& u) { return XHatElement(SExpr::point(u), Trusted{}); }

  const SExpr& expr() const { return e_; }

  friend bool operator==(const XHatElement&, const XHatElement&) = default;
  friend auto operator<=>(const XHatElement& a, const XHatElement& b) { return a.e_ <=> b.e_; }

 private:
  struct Trusted {};
  XHatElement(SExpr e, Trusted) : e_(std::move(e)) {}
  friend XHatElement closure_median(const XHatElement&, const XHatElement&, const XHatElement&);
  friend XHatElement translate(const FreeProduct&, const Word&, const XHatElement&);

  SExpr e_;
};

XHatElement closure_median(const XHatElement& x, const XHatElement& y, const XHatElement& z);
XHatElement translate(const FreeProduct& fp, const Word& s, const XHatElement& e);

enum class RadiusVerdict { Distinct, Indistinguishable };

struct RadiusComparison {
  RadiusVerdict verdict = RadiusVerdict::Indistinguishable;
  /// A separating handle when distinct.
  std::optional<PrimeHandle> witness;
};

RadiusComparison equal_at_radius(const DeformedGroup& d, const SExpr& e, const SExpr& f, std::size_t radius);

struct FragmentElement {
  XHatElement element;
  /// Word with the same signature, when the search found one.
  std::optional<Word> pi;
  bool seed = false;
};

struct RtcReport {
  std::size_t radius = 0;
  /// Handles are sampled at radius + 2.
  std::size_t eval_radius = 0;
  std::size_t handles = 0;
  std::size_t seeds = 0;
  /// Lower bound on the elements distinct at eval_radius.
  std::size_t fragment_size = 0;
  std::size_t new_elements = 0;
  std::size_t pi_retries = 0;
  std::size_t pi_failures = 0;
  std::size_t embed_failures = 0;
  std::size_t retract_failures = 0;
  std::size_t equivariance_failures = 0;
  std::size_t h_equivariance_failures = 0;
  std::size_t freeness_failures = 0;
  std::size_t bridge_failures = 0;
  std::size_t bridge_checked = 0;
  std::vector<FragmentElement> elements;
  std::vector<std::string> samples;
  bool passed() const {
    return pi_failures + embed_failures + retract_failures + equivariance_failures + h_equivariance_failures +
               freeness_failures + bridge_failures ==
           0;
  }
};

/// Median-closes the point opens of ball(radius) with dedup at radius + 2
/// and checks the retraction pi, p = phi o pi, equivariance and freeness.
RtcReport rtc_fragment(const DeformedGroup& d, std::size_t radius, std::size_t max_elements = 4096);

struct TcLevel {
  std::string name;
  std::size_t size = 0;
  /// Counts truncated by a radius are lower bounds.
  bool lower_bound = false;
  std::string note;
};

struct TcReport {
  std::vector<TcLevel> levels;
  bool cross_checked = false;
  std::size_t oracle_count = 0;
  std::size_t majority_count = 0;
  bool passed() const;
};

/// Alternates group and median fragments from a seed with trivial H: the
/// group fragment is ball(radius) of H^ and the median fragment is the
/// median closure of its point opens, with no relations imposed. depth <= 2.
TcReport tc_iterate(const HMedianSet& seed, std::size_t depth, std::size_t radius);

}  // namespace medianforge
