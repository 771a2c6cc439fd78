#include "medianforge/zline.hpp"

#include <algorithm>

#include "medianforge/errors.hpp"

namespace medianforge {

namespace {

bool is_even(std::int64_t a) { return a % 2 == 0; }

std::string args(std::initializer_list<std::int64_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

std::string to_string(ZMedianOp op) {
  switch (op) {
    case ZMedianOp::M0:
      return "m0";
    case ZMedianOp::M1:
      return "m1";
    case ZMedianOp::Mminus1:
      return "m-1";
  }
  return "?";
}

ZMedianOp parse_zop(const std::string& text) {
  if (text == "m0") return ZMedianOp::M0;
  if (text == "m1") return ZMedianOp::M1;
  if (text == "m-1" || text == "mminus1") return ZMedianOp::Mminus1;
  throw MalformedInput("unknown operation on Z: '" + text + "' (expected m0, m1 or m-1)");
}

bool z_precedes_m1(std::int64_t a, std::int64_t b) {
  const bool ea = is_even(a), eb = is_even(b);
  if (ea != eb) return ea;
  return ea ? a < b : a > b;
}

std::int64_t z_middle(const ZOrder& precedes, std::int64_t x, std::int64_t y, std::int64_t z) {
  if (precedes(y, x)) std::swap(x, y);
  if (precedes(z, y)) std::swap(y, z);
  if (precedes(y, x)) std::swap(x, y);
  return y;
}

std::int64_t z_median(ZMedianOp op, std::int64_t x, std::int64_t y, std::int64_t z) {
  switch (op) {
    case ZMedianOp::M0:
      return std::max(std::min(x, y), std::min(std::max(x, y), z));
    case ZMedianOp::M1:
      return z_middle(z_precedes_m1, x, y, z);
    case ZMedianOp::Mminus1:
      return -z_middle(z_precedes_m1, -x, -y, -z);
  }
  return x;
}

ZWindowReport window_verify(ZMedianOp op, std::int64_t n) {
  return window_verify([op](std::int64_t x, std::int64_t y, std::int64_t z) { return z_median(op, x, y, z); },
                       n);
}

ZWindowReport window_verify(const ZTernary& m, std::int64_t n) {
  if (n < 2) throw DomainError("window radius must be at least 2");
  ZWindowReport r;
  r.window = n;
  auto note = [&](const std::string& what) {
    if (!r.witness) r.witness = what;
  };
  const std::int64_t w = 2 * n + 1;
  std::vector<std::int64_t> t(static_cast<std::size_t>(w * w * w));
  auto at = [&](std::int64_t x, std::int64_t y, std::int64_t z) -> std::int64_t& {
    return t[static_cast<std::size_t>(((x + n) * w + (y + n)) * w + (z + n))];
  };
  for (std::int64_t x = -n; x <= n; ++x)
    for (std::int64_t y = -n; y <= n; ++y) {
      for (std::int64_t z = -n; z <= n; ++z) {
        const auto v = m(x, y, z);
        at(x, y, z) = v;
        if (v != x && v != y && v != z) {
          ++r.closure_failures;
          note("closure: " + args({x, y, z}));
        }
      }
      if (m(x, y, x) != x) {
        ++r.absorption_failures;
        note("absorption: " + args({x, y}));
      }
    }
  for (std::int64_t x = -n; x <= n; ++x)
    for (std::int64_t y = -n; y <= n; ++y)
      for (std::int64_t z = -n; z <= n; ++z) {
        const auto v = at(x, y, z);
        if (v != at(y, x, z) || v != at(x, z, y)) {
          ++r.symmetry_failures;
          note("symmetry: " + args({x, y, z}));
        }
        if (x + 1 <= n && y + 1 <= n && z + 1 <= n && v + 1 <= n) {
          ++r.compat_checked;
          if (at(x + 1, y + 1, z + 1) != v + 1) {
            ++r.compat_failures;
            note("translation: " + args({x, y, z}));
          }
        }
      }
  if (r.closure_failures > 0) return r;
  for (std::int64_t x = -n; x <= n; ++x)
    for (std::int64_t y = -n; y <= n; ++y)
      for (std::int64_t z = -n; z <= n; ++z) {
        const auto xyz = at(x, y, z);
        for (std::int64_t u = -n; u <= n; ++u)
          for (std::int64_t v = -n; v <= n; ++v)
            if (at(xyz, u, v) != at(at(x, u, v), at(y, u, v), z)) {
              ++r.distributivity_failures;
              note("self-distributivity: " + args({x, y, z, u, v}));
            }
      }
  return r;
}

std::int64_t z_admissible(ZMedianOp op, std::int64_t n) {
  switch (op) {
    case ZMedianOp::M0:
      return std::max<std::int64_t>(n, 0);
    case ZMedianOp::M1:
      if (n >= 0) return n;
      return is_even(n) ? 0 : 1;
    case ZMedianOp::Mminus1:
      break;
  }
  throw DomainError("m-1 has no admissible retraction onto N");
}

std::vector<std::int64_t> z_interval(ZMedianOp op, std::int64_t a, std::int64_t b, std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t z = -n; z <= n; ++z)
    if (z_median(op, a, b, z) == z) out.push_back(z);
  return out;
}

ZQuotientReport z_quotient_check(std::int64_t n) {
  ZQuotientReport r;
  r.window = n;
  auto note = [&](const std::string& what) {
    if (!r.witness) r.witness = what;
  };
  auto parity = [](std::int64_t a) { return static_cast<int>(is_even(a) ? 0 : 1); };
  for (std::int64_t a = -n; a <= n; ++a) {
    for (std::int64_t b = -n; b <= n; ++b) {
      if (is_even(a) && is_even(b)) {
        for (auto z : z_interval(ZMedianOp::M1, a, b, n))
          if (!is_even(z)) {
            r.evens_convex = false;
            note("convexity: " + args({a, b, z}));
          }
      }
      for (std::int64_t c = -n; c <= n; ++c) {
        const int pa = parity(a), pb = parity(b), pc = parity(c);
        const int maj = (pa + pb + pc) >= 2 ? 1 : 0;
        if (parity(z_median(ZMedianOp::M1, a, b, c)) != maj) {
          r.parity_morphism = false;
          note("parity: " + args({a, b, c}));
        }
        if (is_even(a) && is_even(b) && is_even(c)) {
          const auto m0 = z_median(ZMedianOp::M0, a, b, c);
          if (z_median(ZMedianOp::M1, a, b, c) != m0 || z_median(ZMedianOp::Mminus1, a, b, c) != m0) {
            r.even_restriction = false;
            note("even restriction: " + args({a, b, c}));
          }
        }
      }
    }
  }
  return r;
}

}  // namespace medianforge
