#pragma once

// The three median group operations on (Z, +), checked on finite windows.
//
//   M0      middle under the usual order
//   M1      middle under the order with evens ascending, then odds
//           descending (every even before every odd)
//   Mminus1 M1 conjugated by negation

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace medianforge {

enum class ZMedianOp { M0, M1, Mminus1 };

std::string to_string(ZMedianOp op);
/// Accepts "m0", "m1", "m-1" and "mminus1".
ZMedianOp parse_zop(const std::string& text);

/// True iff a strictly precedes b in the order defining M1.
bool z_precedes_m1(std::int64_t a, std::int64_t b);

std::int64_t z_median(ZMedianOp op, std::int64_t x, std::int64_t y, std::int64_t z);

using ZTernary = std::function<std::int64_t(std::int64_t, std::int64_t, std::int64_t)>;
using ZOrder = std::function<bool(std::int64_t, std::int64_t)>;

/// Middle element of three under a strict total order.
std::int64_t z_middle(const ZOrder& precedes, std::int64_t x, std::int64_t y, std::int64_t z);

struct ZWindowReport {
  std::int64_t window = 0;
  std::uint64_t closure_failures = 0;
  std::uint64_t symmetry_failures = 0;
  std::uint64_t absorption_failures = 0;
  std::uint64_t distributivity_failures = 0;
  std::uint64_t compat_failures = 0;
  std::uint64_t compat_checked = 0;
  /// First failure, if any, as "check: arguments".
  std::optional<std::string> witness;
  bool passed() const {
    return closure_failures + symmetry_failures + absorption_failures + distributivity_failures +
               compat_failures ==
           0;
  }
};

/// Sweeps [-n, n] for the median axioms and m(x+1, y+1, z+1) = m(x, y, z) + 1,
/// skipping translates that leave the window. Requires n >= 2.
ZWindowReport window_verify(ZMedianOp op, std::int64_t n);
ZWindowReport window_verify(const ZTernary& m, std::int64_t n);

/// The retraction onto N (M0) or onto the cell [0, 1] (M1). Throws
/// DomainError for Mminus1.
std::int64_t z_admissible(ZMedianOp op, std::int64_t n);

/// {z in [-n, n] : m(a, b, z) = z}, ascending.
std::vector<std::int64_t> z_interval(ZMedianOp op, std::int64_t a, std::int64_t b, std::int64_t n);

struct ZQuotientReport {
  std::int64_t window = 0;
  bool evens_convex = true;
  bool parity_morphism = true;
  bool even_restriction = true;
  std::optional<std::string> witness;
  bool passed() const { return evens_convex && parity_morphism && even_restriction; }
};

/// On [-n, n]: even intervals of M1 hold only evens, parity is a median
/// morphism onto Z/2 for M1, and M1, Mminus1 agree with M0 on evens.
ZQuotientReport z_quotient_check(std::int64_t n);

}  // namespace medianforge
